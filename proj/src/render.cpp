#include "cubicmcm/render.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cubicmcm/error.hpp"

namespace cubicmcm {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

// x0^12*x1 -> x_{0}^{12} x_{1}
std::string tex_poly(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '*') {
      out += ' ';
    } else if (c == '^') {
      std::size_t k = i + 1;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      out += "^{" + s.substr(i + 1, k - i - 1) + "}";
      i = k - 1;
    } else if (std::isalpha(static_cast<unsigned char>(c)) && i + 1 < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
      std::size_t k = i + 1;
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      out += std::string(1, c) + "_{" + s.substr(i + 1, k - i - 1) + "}";
      i = k - 1;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "tex") return Format::Tex;
  fail(ErrorKind::InvalidDescriptor, "unknown format '" + text + "'");
}

std::vector<std::array<std::int64_t, 3>> betti_rows(const BettiTable& table) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool any = false;
  for (const auto& [key, value] : table.entries()) {
    const std::int64_t row = key.first == 0 ? key.second : key.second - 1;
    lo = any ? std::min(lo, row) : row;
    hi = any ? std::max(hi, row) : row;
    any = true;
  }
  hi = std::max(hi, lo + 2);
  std::vector<std::array<std::int64_t, 3>> rows;
  for (std::int64_t j = lo; j <= hi; ++j) rows.push_back({j, table.window(0, j), table.window(1, j + 1)});
  return rows;
}

std::string render_betti_text(const BettiTable& table) {
  const auto rows = betti_rows(table);
  std::size_t w = 3;
  for (const auto& r : rows) {
    for (auto v : r) w = std::max(w, std::to_string(v).size());
  }
  std::ostringstream os;
  os << pad("j", w) << "  " << pad("i=0", w) << "  " << pad("i=1", w) << "\n";
  for (const auto& r : rows) {
    os << pad(std::to_string(r[0]), w) << "  " << pad(std::to_string(r[1]), w) << "  " << pad(std::to_string(r[2]), w)
       << "\n";
  }
  return os.str();
}

std::string render_betti_tex(const BettiTable& table) {
  std::ostringstream os;
  os << "\\begin{array}{r|rr}\n";
  os << "j & i=0 & i=1 \\\\\n\\hline\n";
  for (const auto& r : betti_rows(table)) os << r[0] << " & " << r[1] << " & " << r[2] << " \\\\\n";
  os << "\\end{array}\n";
  return os.str();
}

std::string free_module_string(const std::map<std::int64_t, std::int64_t>& degrees) {
  std::string out;
  for (const auto& [j, m] : degrees) {
    if (m == 0) continue;
    if (!out.empty()) out += " + ";
    out += j == 0 ? "R" : "R" + twist_suffix(j);
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out.empty() ? "0" : out;
}

std::string render_resolution_text(const std::vector<ResolutionTerm>& terms) {
  std::size_t w = 1;
  for (const auto& t : terms) w = std::max(w, std::to_string(t.position).size());
  std::ostringstream os;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    os << "F" << pad(std::to_string(it->position), w) << "  rank " << it->rank() << "  "
       << free_module_string(it->degrees) << "\n";
  }
  return os.str();
}

std::string render_resolution_tex(const std::vector<ResolutionTerm>& terms) {
  std::ostringstream os;
  os << "\\begin{array}{" << std::string(2 * terms.size() - (terms.empty() ? 0 : 1), 'c') << "}\n";
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!first) os << " & \\to & ";
    first = false;
    std::string mod;
    for (const auto& [j, m] : it->degrees) {
      if (m == 0) continue;
      if (!mod.empty()) mod += " \\oplus ";
      mod += j == 0 ? "R" : "R(" + std::to_string(-j) + ")";
      if (m != 1) mod += "^{" + std::to_string(m) + "}";
    }
    os << (mod.empty() ? "0" : mod);
  }
  os << "\n\\end{array}\n";
  return os.str();
}

std::string render_matrix_text(const PolyMatrix& m, const std::vector<std::string>& names) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells[i][j] = m(i, j).to_string(names);
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << " | ";
      os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
    }
    os << " ]\n";
  }
  return os.str();
}

std::string render_matrix_tex(const PolyMatrix& m, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j != 0) os << " & ";
      os << tex_poly(m(i, j).to_string(names));
    }
    os << (i + 1 == m.rows() ? "\n" : " \\\\\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

std::string twist_suffix(std::int64_t s) {
  if (s == 0) return "";
  return "(" + std::to_string(-s) + ")";
}

}  // namespace cubicmcm
