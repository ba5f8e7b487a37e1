// JSON state descriptors:
//   {"kind": "rics"|"kerr"|"custom", "N": int, "alpha0": [re, im],
//    "q": int (rics only), "coeffs": [[re, im], ...] (custom only)}
// alpha0 is the per-mode circle radius of the two-mode state.
#pragma once

#include "circlight/circular.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circlight::cli {

/// Structurally invalid descriptor (bad JSON, missing or mistyped field).
class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateKind { Rics, Kerr, Custom };

struct StateDescriptor {
  StateKind kind = StateKind::Rics;
  int n = 1;
  Complex alpha0{};
  int q = 0;
  CVector coeffs;
};

/// Parses a JSON literal; arguments not starting with '{' are read as a path.
StateDescriptor parse_descriptor(std::string_view text_or_path);

std::string_view kind_name(StateKind kind) noexcept;

/// Normalized state; throws DomainError on mathematically invalid input.
CircularState build_state(const StateDescriptor& d);

/// The RICS label when the state's Fourier coefficients live on a single
/// index (every RICS, and any state proportional to one).
std::optional<RicsLabel> as_rics(const CircularState& s);

}  // namespace circlight::cli
