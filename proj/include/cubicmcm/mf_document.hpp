#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicmcm/matfac.hpp"

namespace cubicmcm {

inline constexpr std::string_view kMfFormat = "cubicmcm-mf/1";

/// Serializable matrix factorization. The grading, if any, rides on mf.A.
struct MfDocument {
  Field field = Field::rational();
  std::vector<std::string> variables;
  std::optional<Scalar> psi;
  MatrixFactorization mf;
  std::optional<std::string> note;
};

MfDocument make_document(const MatrixFactorization& mf, std::optional<Scalar> psi = std::nullopt,
                         std::optional<std::string> note = std::nullopt);

/// Canonical JSON: sorted keys, two-space indent, terms in grlex order,
/// rationals as "num/den", trailing newline.
std::string encode_mf(const MfDocument& doc);

/// Throws ParseError on malformed input; syntax errors carry the line and
/// column of the last character read, semantic ones a JSON path.
/// and Error(VerificationFailed) when `verify` is set and the pair fails
/// verify_mf, or psi does not match f.
MfDocument decode_mf(std::string_view text, bool verify = true);

}  // namespace cubicmcm
