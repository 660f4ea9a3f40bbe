#pragma once

#include <stdexcept>
#include <string>

namespace grpgeo {

enum class errc {
  not_a_group,
  order_cap_exceeded,
  lattice_cap_exceeded,
  width_cap_exceeded,
  budget_exceeded,
  parse_error,
  unknown_label,
  variable_out_of_range,
  mode_mismatch,
  empty_set,
  not_a_domain,
  characterization_disagreement,
  bad_parameter,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_group: return "NotAGroup";
    case errc::order_cap_exceeded: return "OrderCapExceeded";
    case errc::lattice_cap_exceeded: return "LatticeCapExceeded";
    case errc::width_cap_exceeded: return "WidthCapExceeded";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
    case errc::unknown_label: return "UnknownLabel";
    case errc::variable_out_of_range: return "VariableOutOfRange";
    case errc::mode_mismatch: return "ModeMismatch";
    case errc::empty_set: return "EmptySet";
    case errc::not_a_domain: return "NotADomain";
    case errc::characterization_disagreement: return "CharacterizationDisagreement";
    case errc::bad_parameter: return "BadParameter";
    case errc::io_error: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

  // CLI exit contract: 2 = usage/input error, 3 = cap or budget exceeded.
  int exit_code() const {
    switch (code_) {
      case errc::order_cap_exceeded:
      case errc::lattice_cap_exceeded:
      case errc::width_cap_exceeded:
      case errc::budget_exceeded:
        return 3;
      case errc::characterization_disagreement:
        return 1;
      default:
        return 2;
    }
  }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace grpgeo
