#include "kfib/functionals.hpp"

#include "kfib/errors.hpp"

namespace kfib {

std::string family_name(Family family) {
  switch (family) {
    case Family::W: return "W";
    case Family::R: return "R";
    case Family::B: return "B";
    case Family::P: return "P";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "W") return Family::W;
  if (name == "R") return Family::R;
  if (name == "B") return Family::B;
  if (name == "P") return Family::P;
  throw usage_error("unknown family '" + name + "'");
}

}  // namespace kfib
