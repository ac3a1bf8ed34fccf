#include "cubicmcm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cubicmcm/betti.hpp"
#include "cubicmcm/error.hpp"
#include "cubicmcm/matfac.hpp"
#include "cubicmcm/mf_document.hpp"
#include "cubicmcm/render.hpp"

namespace cubicmcm {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::string variant;
  std::string format = "text";
  std::string field = "q";
  std::string psi = "0";
  std::string point;
  std::string side = "A";
  std::string file;
  std::int64_t steps = 3;
  std::int64_t terms = 10;
  std::int64_t height = 10;
  int domain = 3;
  bool no_verify = false;
  bool nonzero = false;
  bool explicit_form = false;
};

bool ambiguous_ray(const Charge& c) { return c.d == 0 || 3 * c.r == 2 * c.d; }

Variant resolve_variant(const Charge& c, const std::string& flag) {
  const Charge rep = reduce3(c).charge;
  if (ambiguous_ray(rep)) {
    if (flag.empty()) {
      throw UsageError("--variant is required: the domain representative " + to_string(rep) +
                       " lies on an ambiguous ray (use generic, atiyah or special)");
    }
    Variant v;
    try {
      v = parse_variant(flag);
    } catch (const Error&) {
      throw UsageError("--variant: unknown value '" + flag + "'");
    }
    return v;
  }
  if (!flag.empty()) {
    throw UsageError("--variant is only accepted on the rays d = 0 and 3r = 2d; " + to_string(rep) +
                     " is not on them");
  }
  return Variant::Generic;
}

ObjectDescriptor domain_descriptor(const Options& o) {
  const Charge c{o.r, o.d};
  const Variant v = resolve_variant(c, o.variant);
  ObjectDescriptor desc{c, v, std::nullopt};
  desc.validate();
  return desc;
}

json rows_json(const BettiTable& t) {
  json rows = json::array();
  for (const auto& r : betti_rows(t)) rows.push_back({r[0], r[1], r[2]});
  return rows;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string describe(const GeneralBetti& g) { return to_string(g.representative); }

int cmd_betti(const Options& o, std::ostream& out, Format fmt) {
  const Charge c{o.r, o.d};
  const Variant v = resolve_variant(c, o.variant);
  const GeneralBetti g = betti_general(c, v);
  const BettiTable table = g.table.shifted(g.degree_shift);
  const bool transported = g.internal_shift != 0;
  switch (fmt) {
    case Format::Json:
      out << dump({{"charge", {c.r, c.d}},
                   {"object", describe(g)},
                   {"sigma_steps", g.internal_shift},
                   {"cohomological_shift", g.cohomological_shift},
                   {"degree_shift", g.degree_shift},
                   {"layout", "j, beta_{0,j}, beta_{1,j+1}"},
                   {"rows", rows_json(table)}});
      break;
    case Format::Tex:
      out << render_betti_tex(table);
      break;
    case Format::Text:
      out << "charge " << to_string(c) << "\n";
      if (transported) {
        out << "object " << describe(g) << " after " << g.internal_shift << " sigma steps, degree shift "
            << g.degree_shift << "\n";
      } else {
        out << "object " << describe(g) << "\n";
      }
      out << render_betti_text(table);
      break;
  }
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out, Format fmt) {
  const Charge c{o.r, o.d};
  const Reduction red = o.domain == 6 ? reduce6(c) : reduce3(c);
  switch (fmt) {
    case Format::Json:
      out << dump({{"k", red.k}, {"charge", {red.charge.r, red.charge.d}}, {"domain", o.domain}});
      break;
    case Format::Tex:
      out << "$" << (o.domain == 6 ? "(-[\\sigma])" : "[\\sigma]") << "^{" << red.k << "}" << to_string(c) << " = "
          << to_string(red.charge) << "$\n";
      break;
    case Format::Text:
      out << "k=" << red.k << ", charge " << to_string(red.charge) << "\n";
      break;
  }
  return 0;
}

int cmd_resolution(const Options& o, std::ostream& out, Format fmt) {
  if (o.steps < 0 || o.steps > 1000) throw UsageError("--steps must lie in [0, 1000]");
  const Charge c{o.r, o.d};
  const GeneralBetti g = betti_general(c, resolve_variant(c, o.variant));
  auto terms = complete_resolution(g.representative, o.steps);
  for (auto& t : terms) {
    std::map<std::int64_t, std::int64_t> moved;
    for (const auto& [j, m] : t.degrees) moved[j + g.degree_shift] = m;
    t.degrees = std::move(moved);
  }
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& t : terms) {
        json degs = json::array();
        for (const auto& [j, m] : t.degrees) degs.push_back({j, m});
        arr.push_back({{"i", t.position}, {"rank", t.rank()}, {"degrees", degs}});
      }
      out << dump({{"charge", {c.r, c.d}}, {"object", describe(g)}, {"degree_shift", g.degree_shift}, {"terms", arr}});
      break;
    }
    case Format::Tex:
      out << render_resolution_tex(terms);
      break;
    case Format::Text:
      out << "object " << describe(g) << twist_suffix(g.degree_shift) << "\n";
      out << render_resolution_text(terms);
      break;
  }
  return 0;
}

int cmd_invariants(const Options& o, std::ostream& out, Format fmt) {
  const Charge c{o.r, o.d};
  const Variant v = resolve_variant(c, o.variant);
  const GeneralBetti g = betti_general(c, v);
  const HilbertData h = hilbert_data(g.table.shifted(g.degree_shift));
  const bool ulrich = is_ulrich(c, v);
  const Charge bundle = g.representative.charge;
  switch (fmt) {
    case Format::Json:
      out << dump({{"charge", {c.r, c.d}},
                   {"object", describe(g)},
                   {"P", to_string(h.p)},
                   {"B", to_string(h.numerator_b)},
                   {"e", h.multiplicity},
                   {"mu", h.generators},
                   {"rank", h.module_rank},
                   {"bundle_rank", bundle.r},
                   {"bundle_degree", bundle.d},
                   {"ulrich", ulrich}});
      break;
    case Format::Tex:
      out << "$P(t) = " << to_string(h.p) << ",\\ e = " << h.multiplicity << ",\\ \\mu = " << h.generators
          << ",\\ \\mathrm{rk} = " << h.module_rank << "$\n";
      break;
    case Format::Text:
      out << "object " << describe(g) << twist_suffix(g.degree_shift) << "\n";
      out << "P(t) = " << to_string(h.p) << "\n";
      out << "e = " << h.multiplicity << "\n";
      out << "mu = " << h.generators << "\n";
      out << "rank = " << h.module_rank << "\n";
      out << "bundle rank = " << bundle.r << ", bundle degree = " << bundle.d << "\n";
      out << "ulrich = " << (ulrich ? "yes" : "no") << "\n";
      break;
  }
  return 0;
}

int cmd_hilbert(const Options& o, std::ostream& out, Format fmt) {
  if (o.terms < 0 || o.terms > 100000) throw UsageError("--terms must lie in [0, 100000]");
  const Charge c{o.r, o.d};
  const GeneralBetti g = betti_general(c, resolve_variant(c, o.variant));
  const HilbertData h = hilbert_data(g.table.shifted(g.degree_shift));
  // dim M_k = sum_m p_m (k - m + 1) from H = P / (1 - t)^2
  const std::int64_t start = std::min<std::int64_t>(0, h.p.low);
  std::vector<std::pair<std::int64_t, std::int64_t>> dims;
  for (std::int64_t k = start; k <= start + o.terms; ++k) {
    std::int64_t sum = 0;
    for (std::size_t idx = 0; idx < h.p.coeffs.size(); ++idx) {
      const std::int64_t m = h.p.low + static_cast<std::int64_t>(idx);
      if (m <= k) sum += h.p.coeffs[idx] * (k - m + 1);
    }
    dims.emplace_back(k, sum);
  }
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& [k, v] : dims) arr.push_back({k, v});
      out << dump({{"object", describe(g)}, {"P", to_string(h.p)}, {"dimensions", arr}});
      break;
    }
    case Format::Tex:
      out << "$H_M(t) = \\frac{" << to_string(h.p) << "}{(1-t)^2}$\n";
      break;
    case Format::Text:
      out << "object " << describe(g) << twist_suffix(g.degree_shift) << "\n";
      out << "H(t) = (" << to_string(h.p) << ")/(1 - t)^2\n";
      for (const auto& [k, v] : dims) out << "dim M_" << k << " = " << v << "\n";
      break;
  }
  return 0;
}

int cmd_syzygy(const Options& o, std::ostream& out, Format fmt) {
  const ObjectDescriptor desc = domain_descriptor(o);
  const SyzygyResult s = descriptor_syzygy(desc);
  const std::string rhs = to_string(s.descriptor) + twist_suffix(s.degree_shift);
  switch (fmt) {
    case Format::Json:
      out << dump({{"object", to_string(desc)}, {"syzygy", to_string(s.descriptor)}, {"degree_shift", s.degree_shift}});
      break;
    case Format::Tex:
      out << "$\\mathrm{syz}\\," << to_string(desc) << " \\cong " << rhs << "$\n";
      break;
    case Format::Text:
      out << "syz " << to_string(desc) << " = " << rhs << "\n";
      break;
  }
  return 0;
}

// --- matrix factorizations -------------------------------------------------

Field parse_field(const Options& o) {
  try {
    return Field::parse(o.field);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

Scalar parse_psi(const Field& k, const Options& o) {
  try {
    return Scalar::parse(k, o.psi);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--psi: ") + e.what());
  }
}

CurvePoint parse_point(const Field& k, const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != '[' && ch != ']' && ch != '(' && ch != ')') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw UsageError("--point expects three coordinates, e.g. 1,2,3");
  try {
    return CurvePoint{{Scalar::parse(k, parts[0]), Scalar::parse(k, parts[1]), Scalar::parse(k, parts[2])}};
  } catch (const ParseError& e) {
    throw UsageError(std::string("--point: ") + e.what());
  }
}

CurvePoint choose_point(const HesseCubic& curve, const Options& o, bool nonzero) {
  if (!o.point.empty()) return parse_point(curve.field(), o.point);
  const auto pts = curve.field().is_rational() ? rational_point_search(curve, o.height, nonzero)
                                               : point_search(curve, nonzero);
  if (pts.empty()) {
    fail(ErrorKind::NotOnCurve, "no suitable point found by search; pass --point");
  }
  return pts.front();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string degrees_string(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void print_report(const MfReport& rep, std::ostream& out, Format fmt) {
  if (fmt == Format::Json) {
    json j{{"shapes", rep.shapes_ok}, {"ab", rep.ab_ok},         {"ba", rep.ba_ok},
           {"f_homogeneous", rep.f_homogeneous}, {"grading", rep.grading_ok}, {"minimal", rep.minimal},
           {"ok", rep.ok()}, {"failures", rep.failures}};
    if (rep.grading) j["degrees"] = {{"rows", rep.grading->row_degrees}, {"cols", rep.grading->col_degrees}};
    out << dump(j);
    return;
  }
  out << "A*B = f*I: " << yes_no(rep.ab_ok) << "\n";
  out << "B*A = f*I: " << yes_no(rep.ba_ok) << "\n";
  out << "f homogeneous: " << yes_no(rep.f_homogeneous) << "\n";
  out << "graded: " << yes_no(rep.grading_ok);
  if (rep.grading) {
    out << " (rows " << degrees_string(rep.grading->row_degrees) << ", cols "
        << degrees_string(rep.grading->col_degrees) << ")";
  }
  out << "\n";
  out << "minimal: " << yes_no(rep.minimal) << "\n";
  for (const auto& f : rep.failures) out << "failure: " << f << "\n";
  out << "result: " << (rep.ok() ? "ok" : "FAILED") << "\n";
}

int emit_mf(const MfDocument& doc, std::ostream& out, Format fmt) {
  switch (fmt) {
    case Format::Json:
      out << encode_mf(doc);
      break;
    case Format::Tex:
      out << "A = " << render_matrix_tex(doc.mf.A, doc.variables);
      out << "B = " << render_matrix_tex(doc.mf.B, doc.variables);
      break;
    case Format::Text: {
      if (doc.note) out << *doc.note << "\n";
      out << "f = " << doc.mf.f.to_string(doc.variables) << "\n";
      out << "A =\n" << render_matrix_text(doc.mf.A, doc.variables);
      out << "B =\n" << render_matrix_text(doc.mf.B, doc.variables);
      print_report(verify_mf(doc.mf), out, fmt);
      break;
    }
  }
  return 0;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("FILE: cannot open '" + path + "'");
  ss << f.rdbuf();
  return ss.str();
}

int cmd_mf_build(const std::string& which, const Options& o, std::ostream& out, Format fmt) {
  const Field k = parse_field(o);
  const HesseCubic curve = hesse(parse_psi(k, o));
  std::optional<MatrixFactorization> mf;
  std::string note;
  const std::string psi_note = ", psi = " + curve.psi.to_string();
  if (which == "koszul") {
    mf = koszul_hesse(curve);
    note = "koszul factorization" + psi_note;
  } else if (which == "moore") {
    const CurvePoint p = choose_point(curve, o, true);
    mf = moore_mf(curve, p);
    note = "moore factorization at " + to_string(p) + psi_note;
  } else {
    const CurvePoint p = choose_point(curve, o, o.explicit_form);
    mf = o.explicit_form ? skyscraper_explicit(curve, p) : skyscraper_mf(curve, p);
    note = std::string(o.explicit_form ? "explicit " : "") + "skyscraper factorization at " + to_string(p) + psi_note;
  }
  mf->A.set_grading(infer_pair_grading(*mf));
  return emit_mf(make_document(*mf, curve.psi, note), out, fmt);
}

int cmd_mf_verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err, Format fmt) {
  const MfDocument doc = decode_mf(read_input(o.file, in), false);
  MfReport rep = verify_mf(doc.mf);
  if (doc.psi) {
    const bool psi_ok = doc.variables.size() == 3 && hesse(*doc.psi).f == doc.mf.f;
    if (!psi_ok) rep.failures.push_back("f is not the Hesse cubic for psi = " + doc.psi->to_string());
  }
  print_report(rep, out, fmt);
  if (!rep.ok()) {
    err << "error: VerificationFailed: " << rep.failures.front() << "\n";
    return 1;
  }
  return 0;
}

int cmd_mf_betti(const Options& o, std::istream& in, std::ostream& out, Format fmt) {
  const MfDocument doc = decode_mf(read_input(o.file, in), !o.no_verify);
  MfSide side;
  try {
    side = parse_side(o.side);
  } catch (const Error&) {
    throw UsageError("--side must be A or B");
  }
  const BettiTable t = betti_from_mf(doc.mf, side);
  switch (fmt) {
    case Format::Json:
      out << dump({{"side", to_string(side)}, {"layout", "j, beta_{0,j}, beta_{1,j+1}"}, {"rows", rows_json(t)}});
      break;
    case Format::Tex:
      out << render_betti_tex(t);
      break;
    case Format::Text:
      out << "coker " << to_string(side) << "\n" << render_betti_text(t);
      break;
  }
  return 0;
}

int cmd_points(const Options& o, std::ostream& out, Format fmt) {
  const Field k = parse_field(o);
  const HesseCubic curve = hesse(parse_psi(k, o));
  if (o.height < 0 || o.height > 1000) throw UsageError("--height must lie in [0, 1000]");
  if (!k.is_rational() && k.modulus() > 100003) {
    fail(ErrorKind::InvalidField, "point enumeration is limited to p <= 100003");
  }
  const auto pts = k.is_rational() ? rational_point_search(curve, o.height, o.nonzero) : point_search(curve, o.nonzero);
  switch (fmt) {
    case Format::Json: {
      json arr = json::array();
      for (const auto& p : pts) arr.push_back({p[0].to_string(), p[1].to_string(), p[2].to_string()});
      out << dump({{"field", k.descriptor()}, {"psi", curve.psi.to_string()}, {"points", arr}});
      break;
    }
    case Format::Tex:
      for (const auto& p : pts) out << "$" << to_string(p) << "$\\\\\n";
      break;
    case Format::Text:
      for (const auto& p : pts) out << to_string(p) << "\n";
      break;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Betti tables, invariants and matrix factorizations of MCM modules over a plane cubic"};
  app.name("cubicmcm");
  app.require_subcommand(1);
  Options o;

  auto add_charge = [&o](CLI::App* sub, bool with_variant) {
    sub->add_option("r", o.r, "rank")->required();
    sub->add_option("d", o.d, "degree")->required();
    if (with_variant) {
      sub->add_option("--variant", o.variant, "generic|atiyah|special (only on the rays d = 0 and 3r = 2d)");
    }
  };
  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "text|json|tex")->check(CLI::IsMember({"text", "json", "tex"}));
  };
  auto add_curve = [&o](CLI::App* sub) {
    sub->add_option("--field", o.field, "q or fp:P");
    sub->add_option("--psi", o.psi, "Hesse parameter, psi^3 != 1");
  };

  CLI::App* betti = app.add_subcommand("betti", "Betti table of the object with charge (r,d)");
  add_charge(betti, true);
  add_format(betti);
  CLI::App* reduce = app.add_subcommand("reduce", "reduce a charge into the fundamental domain");
  add_charge(reduce, false);
  add_format(reduce);
  reduce->add_option("--domain", o.domain, "3 or 6")->check(CLI::IsMember({3, 6}));
  CLI::App* resolution = app.add_subcommand("resolution", "terms of the complete resolution");
  add_charge(resolution, true);
  add_format(resolution);
  resolution->add_option("--steps", o.steps, "terms on each side of position 0");
  CLI::App* invariants = app.add_subcommand("invariants", "P(t), multiplicity, generators, module rank");
  add_charge(invariants, true);
  add_format(invariants);
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series and graded dimensions");
  add_charge(hilbert, true);
  add_format(hilbert);
  hilbert->add_option("--terms", o.terms, "number of degrees to list");
  CLI::App* syzygy = app.add_subcommand("syzygy", "syzygy module of a fundamental-domain object");
  add_charge(syzygy, true);
  add_format(syzygy);

  CLI::App* mf = app.add_subcommand("mf", "matrix factorizations of the Hesse cubic");
  mf->require_subcommand(1);
  CLI::App* koszul = mf->add_subcommand("koszul", "Koszul factorization");
  CLI::App* moore = mf->add_subcommand("moore", "Moore factorization at a point with nonzero coordinates");
  CLI::App* sky = mf->add_subcommand("skyscraper", "factorization of a skyscraper sheaf");
  for (CLI::App* sub : {koszul, moore, sky}) {
    add_curve(sub);
    add_format(sub);
  }
  for (CLI::App* sub : {moore, sky}) {
    sub->add_option("--point", o.point, "a0,a1,a2 (default: first point found by search)");
    sub->add_option("--height", o.height, "search bound for rational points");
  }
  sky->add_flag("--explicit", o.explicit_form, "use the closed-form matrices (needs a0 a1 a2 != 0)");
  CLI::App* verify = mf->add_subcommand("verify", "check a factorization document");
  verify->add_option("FILE", o.file, "document path or - for stdin")->required();
  add_format(verify);
  CLI::App* mfbetti = mf->add_subcommand("betti", "Betti table read off a graded factorization");
  mfbetti->add_option("FILE", o.file, "document path or - for stdin")->required();
  mfbetti->add_option("--side", o.side, "A or B");
  mfbetti->add_flag("--no-verify", o.no_verify, "skip verification on load");
  add_format(mfbetti);

  CLI::App* points = app.add_subcommand("points", "points of the Hesse cubic");
  add_curve(points);
  add_format(points);
  points->add_flag("--nonzero", o.nonzero, "only points with a0 a1 a2 != 0");
  points->add_option("--height", o.height, "search bound for rational points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(o.format);
    if (*betti) return cmd_betti(o, out, fmt);
    if (*reduce) return cmd_reduce(o, out, fmt);
    if (*resolution) return cmd_resolution(o, out, fmt);
    if (*invariants) return cmd_invariants(o, out, fmt);
    if (*hilbert) return cmd_hilbert(o, out, fmt);
    if (*syzygy) return cmd_syzygy(o, out, fmt);
    if (*points) return cmd_points(o, out, fmt);
    if (*koszul) return cmd_mf_build("koszul", o, out, fmt);
    if (*moore) return cmd_mf_build("moore", o, out, fmt);
    if (*sky) return cmd_mf_build("skyscraper", o, out, fmt);
    if (*verify) return cmd_mf_verify(o, in, out, err, fmt);
    if (*mfbetti) return cmd_mf_betti(o, in, out, fmt);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no command given\n";
  return 2;
}

}  // namespace cubicmcm
