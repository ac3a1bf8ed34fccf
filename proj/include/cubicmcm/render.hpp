#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubicmcm/betti.hpp"
#include "cubicmcm/poly_matrix.hpp"

namespace cubicmcm {

enum class Format { Text, Json, Tex };

Format parse_format(const std::string& text);

/// Rows (j, beta_{0,j}, beta_{1,j+1}) for j ascending. At least three rows
/// are produced, starting at the smallest j carrying an entry.
std::vector<std::array<std::int64_t, 3>> betti_rows(const BettiTable& table);

std::string render_betti_text(const BettiTable& table);
std::string render_betti_tex(const BettiTable& table);

/// "R(-3) + R(-4)^3"; "0" for the zero module.
std::string free_module_string(const std::map<std::int64_t, std::int64_t>& degrees);

std::string render_resolution_text(const std::vector<ResolutionTerm>& terms);
/// Staircase of free modules joined by arrows, as a TeX array.
std::string render_resolution_tex(const std::vector<ResolutionTerm>& terms);

std::string render_matrix_text(const PolyMatrix& m, const std::vector<std::string>& names = {});
std::string render_matrix_tex(const PolyMatrix& m, const std::vector<std::string>& names = {});

/// "(-2)" for the twist M(-s) with s = 2; empty for s = 0.
std::string twist_suffix(std::int64_t s);

}  // namespace cubicmcm
