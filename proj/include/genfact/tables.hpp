#pragma once

#include <string>

namespace genfact {

/// Tab-separated reproduction of the (ℤ, ℕ) value tables, header row
/// included, every line newline-terminated:
///   1: [n] for n = 1..60 (decimal column filled for n <= 40), prime-factored
///   2: k! for k = 0..19, decimal with thousands separators and factored
///   3: binomials for 0 <= ℓ <= k <= 10, decimal
///   4: binomials for 0 <= ℓ <= min(k, 7), k <= 10, factored
/// Throws std::invalid_argument for any other table number.
std::string render_table(int which);

}  // namespace genfact
