#include "exactkit/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <functional>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "exactkit/combinatorics.hpp"
#include "exactkit/complex.hpp"
#include "exactkit/error.hpp"
#include "exactkit/geometry.hpp"
#include "exactkit/linear_system.hpp"
#include "exactkit/literals.hpp"
#include "exactkit/logic.hpp"
#include "exactkit/magma.hpp"
#include "exactkit/matrix.hpp"
#include "exactkit/number_theory.hpp"
#include "exactkit/ratio.hpp"
#include "exactkit/relations.hpp"
#include "exactkit/render.hpp"
#include "exactkit/sets.hpp"

namespace exactkit::cli {

namespace {

using render::Json;

struct Output {
  Json json;
  std::string text;
};

using Action = std::function<Output()>;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::int64_t small_int(const std::string& text) {
  const Int v = parse_int(text);
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
    fail(ErrorCode::OutOfDomain, "integer " + text + " is too large here");
  }
  return v.convert_to<std::int64_t>();
}

/// Rational with an optional "%" suffix, or a per-mille value converted to
/// percent.
Rational percent_value(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  static const std::string kPerMille = "\xE2\x80\xB0";
  if (text.size() >= kPerMille.size() && text.compare(text.size() - kPerMille.size(), kPerMille.size(), kPerMille) == 0) {
    return Rational::parse(text.substr(0, text.size() - kPerMille.size())) / 10;
  }
  if (!text.empty() && text.back() == '%') text.pop_back();
  return Rational::parse(text);
}

/// "x+9", "2x-1", "x", "3" (the unknown is x).
Affine parse_affine(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const std::size_t x = s.find('x');
  if (x == std::string::npos) return Affine::value(Rational::parse(s));
  if (s.find('x', x + 1) != std::string::npos) throw ParseError("unknown x appears twice", x);
  std::string coef = s.substr(0, x);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  Rational c = coef.empty() || coef == "+" ? Rational(1) : coef == "-" ? Rational(-1) : Rational::parse(coef);
  const std::string rest = s.substr(x + 1);
  Rational k = rest.empty() ? Rational(0) : Rational::parse(rest);
  return {c, k};
}

LinearSystem parse_system(const std::string& text, bool augmented) {
  if (augmented) return LinearSystem::from_augmented(Matrix::parse(text));
  std::string rows = text;
  for (char& c : rows) {
    if (c == '\n') c = ';';
  }
  const std::size_t bars = static_cast<std::size_t>(std::count(rows.begin(), rows.end(), '|'));
  if (bars == 0) throw ParseError("expected 'A | b' or --augmented", 0);
  if (bars == 1) {
    const std::size_t bar = rows.find('|');
    std::string rhs = rows.substr(bar + 1);
    for (char& c : rhs) {
      if (c == ';') c = ' ';
    }
    return LinearSystem(Matrix::parse(rows.substr(0, bar)), parse_rational_list(rhs));
  }
  // One "coefficients | rhs" per row.
  std::string merged;
  for (char c : rows) merged += c == '|' ? ' ' : c;
  return LinearSystem::from_augmented(Matrix::parse(merged));
}

std::vector<std::string> split_words(const std::string& text) {
  std::istringstream is(text);
  return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

Magma parse_magma(const std::string& carrier, const std::string& table) {
  std::vector<std::string> labels;
  for (const auto& w : split_words(carrier)) {
    std::string t = w;
    if (!t.empty() && t.back() == ',') t.pop_back();
    if (!t.empty()) labels.push_back(t);
  }
  std::vector<std::vector<std::string>> rows;
  std::string current;
  auto flush = [&] {
    auto words = split_words(current);
    if (!words.empty()) rows.push_back(std::move(words));
    current.clear();
  };
  for (char c : table) {
    if (c == ';' || c == '\n') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return magma_from_labels(labels, rows);
}

Json magma_json(const Magma& m) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.size(); ++b) {
      const auto c = m(a, b);
      row.push_back(c ? Json(m.label(*c)) : Json(nullptr));
    }
    rows.push_back(row);
  }
  return Json{{"carrier", m.labels()}, {"table", rows}};
}

Output structure_output(const Magma& m) {
  const StructureReport r = classify_structure(m);
  Output o;
  o.json = Json{{"closed", r.closed},
                {"associative", r.associative},
                {"commutative", r.commutative},
                {"neutral", r.neutral ? Json(m.label(*r.neutral)) : Json(nullptr)},
                {"all_invertible", r.all_invertible},
                {"structure", std::string(to_string(r.structure))}};
  std::string inv;
  Json inv_json = Json::object();
  for (std::size_t a = 0; a < r.inverses.size(); ++a) {
    inv += (a ? ", " : "") + m.label(a) + "^-1 = " + m.label(r.inverses[a]);
    inv_json[m.label(a)] = m.label(r.inverses[a]);
  }
  o.json["inverses"] = inv_json;
  o.text = "closed: " + yes_no(r.closed) + "\nassociative: " + yes_no(r.associative) +
           "\ncommutative: " + yes_no(r.commutative) +
           "\nneutral: " + (r.neutral ? m.label(*r.neutral) : "none") + "\n";
  if (!inv.empty()) o.text += "inverses: " + inv + "\n";
  o.text += "structure: " + std::string(to_string(r.structure)) + "\n";
  return o;
}

Json distance_json(const Distance& d) { return Json{{"d", d.d}, {"d_sq", render::rat_json(d.d_sq)}}; }

std::string distance_text(const Distance& d) {
  return "d = " + render::num(d.d) + " (d^2 = " + d.d_sq.str() + ")";
}

Json line_json(const Line& l) {
  return Json{{"point", render::vec_json(l.point)}, {"dir", render::vec_json(l.dir)}, {"canonical", l.str()}};
}

std::string line_parametric_text(const Line& l) {
  static const char* kNames[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t k = 0; k < 3; ++k) {
    out += std::string(k ? ", " : "") + kNames[k] + " = " + render::affine_text({l.dir[k]}, {"t"}, l.point[k]);
  }
  return out;
}

Output plane_output(const Plane& p) {
  Output o;
  o.json = Json{{"coefficients", render::rats_json({p.a, p.b, p.c, p.d})}, {"equation", p.str()}};
  o.text = "equation: " + p.str() + "\n";
  try {
    const SegmentForm s = segment_form(p);
    o.json["segment"] = render::rats_json({s.l, s.m, s.n});
    o.text += "segment: x/(" + s.l.str() + ") + y/(" + s.m.str() + ") + z/(" + s.n.str() + ") = 1\n";
  } catch (const Error&) {
    o.json["segment"] = nullptr;
    o.text += "segment: undefined (a coefficient is zero)\n";
  }
  const HesseForm h = hesse_form(p);
  o.json["hesse"] = Json{{"cos_alpha", h.cos_a}, {"cos_beta", h.cos_b}, {"cos_gamma", h.cos_g},
                         {"p", h.p}, {"p_sq", render::rat_json(h.p_sq)}};
  auto signed_term = [](double v, const char* var, bool first) {
    std::string s = render::num(std::abs(v));
    const bool neg = v < 0 && s != "0";
    return (first ? (neg ? "-" : "") : (neg ? " - " : " + ")) + s + var;
  };
  o.text += "hesse: " + signed_term(h.cos_a, "x", true) + signed_term(h.cos_b, "y", false) +
            signed_term(h.cos_g, "z", false) + " - " + render::num(h.p) + " = 0 (p^2 = " + h.p_sq.str() + ")\n";
  const PlaneParametric pp = parametric_form(p);
  o.json["parametric"] = Json{{"point", render::vec_json(pp.point)}, {"u", render::vec_json(pp.u)},
                              {"v", render::vec_json(pp.v)}};
  o.text += "parametric: point " + pp.point.str() + ", u " + pp.u.str() + ", v " + pp.v.str() + "\n";
  return o;
}

const char* kTree =
    "Commands:\n"
    "  nt     gcd lcm factor prime tobase frombase divmod\n"
    "  comb   fact binom expand term sum\n"
    "  logic  table classify equiv\n"
    "  set    ops power cart venn3\n"
    "  rel    props classes compose inverse function\n"
    "  alg    cayley classify distrib\n"
    "  cx     arith polar pow roots\n"
    "  mat    arith det minor adj inverse rank solveq\n"
    "  sys    classify gauss cramer invmethod homogeneous\n"
    "  geo    vec decompose triangle tetra plane line relate dist\n"
    "  mix    prop split percent chain simple intensity star\n"
    "Literals: rationals 3, -2/5, 2.45; matrices \"2 -3; 0 1\"; sets \"{1, 2}\";\n"
    "relations \"{(1, 2), (2, 3)}\"; complex \"3+4i\"; vectors \"(1, 2, 3)\";\n"
    "planes \"A B C D\"; lines \"point=(..) dir=(..)\" or \"(x-1)/2=y/3=(z+1)/-1\".\n"
    "A literal given as '-' is read from stdin.";

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact computational mathematics toolkit", "exactkit"};
  app.footer(kTree);
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of text");

  std::deque<std::string> strs;
  std::deque<std::vector<std::string>> lists;
  auto str = [&strs]() -> std::string& { return strs.emplace_back(); };
  auto list = [&lists]() -> std::vector<std::string>& { return lists.emplace_back(); };

  std::optional<std::string> stdin_cache;
  auto lit = [&](const std::string& s) -> std::string {
    if (s != "-") return s;
    if (!stdin_cache) stdin_cache = std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    return *stdin_cache;
  };

  Action action;
  auto leaf = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    return parent->add_subcommand(name, desc);
  };
  auto on = [&action](CLI::App* c, Action a) { c->callback([&action, a] { action = a; }); };
  auto group = [&app](const std::string& name, const std::string& desc) {
    CLI::App* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };

  // ---- nt
  {
    CLI::App* nt = group("nt", "Integer number theory");

    auto* c = leaf(nt, "gcd", "Greatest common divisor by Euclid's algorithm");
    auto& a = str();
    auto& b = str();
    auto* trace = c->add_flag("--trace", "Show each division step");
    c->add_option("a", a)->required();
    c->add_option("b", b)->required();
    on(c, [&a, &b, trace] {
      const GcdResult g = gcd(parse_int(a), parse_int(b));
      Output o;
      Json steps = Json::array();
      for (const auto& s : g.trace) {
        steps.push_back(Json{{"dividend", render::int_json(s.dividend)}, {"divisor", render::int_json(s.divisor)},
                             {"quotient", render::int_json(s.quotient)}, {"remainder", render::int_json(s.remainder)}});
        if (*trace) {
          o.text += s.dividend.str() + " = " + s.quotient.str() + "·" + s.divisor.str() + " + " + s.remainder.str() + "\n";
        }
      }
      o.json = Json{{"gcd", render::int_json(g.gcd)}, {"trace", steps}};
      o.text += g.gcd.str() + "\n";
      return o;
    });

    c = leaf(nt, "lcm", "Least common multiple");
    auto& la = str();
    auto& lb = str();
    c->add_option("a", la)->required();
    c->add_option("b", lb)->required();
    on(c, [&la, &lb] {
      const Int v = lcm(parse_int(la), parse_int(lb));
      return Output{Json{{"lcm", render::int_json(v)}}, v.str() + "\n"};
    });

    c = leaf(nt, "factor", "Prime factorization");
    auto& fn = str();
    c->add_option("n", fn)->required();
    on(c, [&fn] {
      const auto f = factorize(parse_int(fn));
      Output o;
      o.json = Json{{"n", render::int_json(parse_int(fn))}, {"factors", Json::array()}};
      for (std::size_t i = 0; i < f.size(); ++i) {
        o.json["factors"].push_back(Json{{"prime", render::int_json(f[i].prime)}, {"multiplicity", f[i].multiplicity}});
        o.text += (i ? " · " : "") + f[i].prime.str();
        if (f[i].multiplicity > 1) o.text += "^" + std::to_string(f[i].multiplicity);
      }
      o.text += "\n";
      return o;
    });

    c = leaf(nt, "prime", "Primality test");
    auto& pn = str();
    c->add_option("n", pn)->required();
    on(c, [&pn] {
      const bool p = is_prime(parse_int(pn));
      return Output{Json{{"n", render::int_json(parse_int(pn))}, {"prime", p}}, p ? "prime\n" : "not prime\n"};
    });

    c = leaf(nt, "tobase", "Representation in base 2..16");
    auto& tn = str();
    c->add_option("n", tn)->required();
    auto* tb = c->add_option("-b,--base", "Target base")->required();
    on(c, [&tn, tb] {
      const Digits d = to_base(parse_int(tn), tb->as<int>());
      return Output{Json{{"base", d.base}, {"digits", d.coeffs}, {"text", d.str()}},
                    "(" + d.str() + ")_" + std::to_string(d.base) + "\n"};
    });

    c = leaf(nt, "frombase", "Value of a digit string in base 2..16");
    auto& fd = str();
    c->add_option("digits", fd)->required();
    auto* fb = c->add_option("-b,--base", "Source base")->required();
    on(c, [&fd, fb] {
      const Int v = from_base(parse_digits(fd, fb->as<int>()));
      return Output{Json{{"value", render::int_json(v)}}, v.str() + "\n"};
    });

    c = leaf(nt, "divmod", "Division with remainder, 0 <= r < b");
    auto& da = str();
    auto& db = str();
    c->add_option("a", da)->required();
    c->add_option("b", db)->required();
    on(c, [&da, &db] {
      const DivMod d = divmod_euclid(parse_int(da), parse_int(db));
      return Output{Json{{"quotient", render::int_json(d.quotient)}, {"remainder", render::int_json(d.remainder)}},
                    "q = " + d.quotient.str() + ", r = " + d.remainder.str() + "\n"};
    });
  }

  // ---- comb
  {
    CLI::App* comb = group("comb", "Combinatorics and closed-form sums");

    auto* c = leaf(comb, "fact", "n!");
    auto& n1 = str();
    c->add_option("n", n1)->required();
    on(c, [&n1] {
      const Int v = factorial(small_int(n1));
      return Output{Json{{"value", render::int_json(v)}}, v.str() + "\n"};
    });

    c = leaf(comb, "binom", "Binomial coefficient C(n, k)");
    auto& bn = str();
    auto& bk = str();
    c->add_option("n", bn)->required();
    c->add_option("k", bk)->required();
    on(c, [&bn, &bk] {
      const Int v = binom(small_int(bn), small_int(bk));
      return Output{Json{{"value", render::int_json(v)}}, v.str() + "\n"};
    });

    auto terms_json = [](const std::vector<Monomial>& terms) {
      Json arr = Json::array();
      for (const auto& m : terms) arr.push_back(Json{{"coeff", render::rat_json(m.coeff)}, {"exponent", render::rat_json(m.exponent)}});
      return arr;
    };

    c = leaf(comb, "expand", "Expand (c1 x^e1 + c2 x^e2)^n");
    auto& en = str();
    auto& ec1 = str();
    auto& ee1 = str();
    auto& ec2 = str();
    auto& ee2 = str();
    c->add_option("n", en)->required();
    c->add_option("c1", ec1)->required();
    c->add_option("e1", ee1)->required();
    c->add_option("c2", ec2)->required();
    c->add_option("e2", ee2)->required();
    on(c, [&, terms_json] {
      const auto t = binom_expand(small_int(en), Rational::parse(ec1), Rational::parse(ee1), Rational::parse(ec2),
                                  Rational::parse(ee2));
      return Output{Json{{"terms", terms_json(t)}}, format_polynomial(t) + "\n"};
    });

    c = leaf(comb, "term", "The term T_j (1-based) of (c1 x^e1 + c2 x^e2)^n");
    auto& tn = str();
    auto& tj = str();
    auto& tc1 = str();
    auto& te1 = str();
    auto& tc2 = str();
    auto& te2 = str();
    c->add_option("n", tn)->required();
    c->add_option("j", tj)->required();
    c->add_option("c1", tc1)->required();
    c->add_option("e1", te1)->required();
    c->add_option("c2", tc2)->required();
    c->add_option("e2", te2)->required();
    on(c, [&, terms_json] {
      const std::int64_t j = small_int(tj);
      if (j < 1) fail(ErrorCode::OutOfDomain, "terms are numbered from 1");
      const Monomial m = binom_term(small_int(tn), j - 1, Rational::parse(tc1), Rational::parse(te1),
                                    Rational::parse(tc2), Rational::parse(te2));
      return Output{Json{{"term", terms_json({m})[0]}}, format_polynomial({m}) + "\n"};
    });

    c = leaf(comb, "sum", "Closed-form value of a classic finite sum");
    auto& sk = str();
    auto& sn = str();
    c->add_option("kind", sk, "first_n, odd, triangular, squares, recip_consecutive, recip_odd, product_consecutive")
        ->required();
    c->add_option("n", sn)->required();
    on(c, [&sk, &sn] {
      const Rational v = closed_form_sum(parse_sum_kind(sk), small_int(sn));
      return Output{Json{{"value", render::rat_json(v)}}, v.str() + "\n"};
    });
  }

  // ---- logic
  {
    CLI::App* lg = group("logic", "Propositional logic");

    auto* c = leaf(lg, "table", "Truth table");
    auto& f = str();
    c->add_option("formula", f)->required();
    on(c, [&] {
      const logic::Formula formula = logic::parse_formula(lit(f));
      const logic::TruthTable t = logic::truth_table(formula);
      Output o;
      Json rows = Json::array();
      const std::string head = logic::to_string(formula);
      for (const auto& a : t.atoms) o.text += a + " ";
      o.text += "| " + head + "\n";
      for (const auto& r : t.rows) {
        for (std::size_t k = 0; k < r.values.size(); ++k) {
          o.text += std::string(r.values[k] ? "T" : "F") + std::string(t.atoms[k].size(), ' ');
        }
        o.text += std::string("| ") + (r.result ? "T" : "F") + "\n";
        rows.push_back(Json{{"values", r.values}, {"result", r.result}});
      }
      o.json = Json{{"formula", head}, {"atoms", t.atoms}, {"rows", rows}};
      return o;
    });

    c = leaf(lg, "classify", "Tautology, contradiction or contingent");
    auto& cf = str();
    c->add_option("formula", cf)->required();
    on(c, [&] {
      const auto k = logic::classify(logic::parse_formula(lit(cf)));
      const std::string s(logic::to_string(k));
      return Output{Json{{"classification", s}}, s + "\n"};
    });

    c = leaf(lg, "equiv", "Logical equivalence of two formulas");
    auto& e1 = str();
    auto& e2 = str();
    c->add_option("f", e1)->required();
    c->add_option("g", e2)->required();
    on(c, [&] {
      const bool eq = logic::equivalent(logic::parse_formula(lit(e1)), logic::parse_formula(lit(e2)));
      return Output{Json{{"equivalent", eq}}, eq ? "equivalent\n" : "not equivalent\n"};
    });
  }

  // ---- set
  {
    CLI::App* st = group("set", "Finite sets");

    auto* c = leaf(st, "ops", "Union, intersection, differences, symmetric difference");
    auto& sa = str();
    auto& sb = str();
    auto& universe = str();
    c->add_option("A", sa)->required();
    c->add_option("B", sb)->required();
    c->add_option("-u,--universe", universe, "Also print complements in this universe");
    on(c, [&] {
      const FinSet a = parse_set(lit(sa));
      const FinSet b = parse_set(lit(sb));
      Output o;
      auto put = [&o](const char* key, const char* label, const FinSet& r) {
        o.json[key] = render::set_json(r);
        o.text += std::string(label) + ": " + r.str() + "\n";
      };
      put("union", "union", set_op(a, b, SetOp::Union));
      put("intersection", "intersection", set_op(a, b, SetOp::Intersect));
      put("difference_ab", "A \\ B", set_op(a, b, SetOp::Diff));
      put("difference_ba", "B \\ A", set_op(b, a, SetOp::Diff));
      put("symmetric_difference", "symmetric difference", set_op(a, b, SetOp::SymDiff));
      if (!universe.empty()) {
        const FinSet u = parse_set(lit(universe));
        const FinSet ca = complement(a, u);
        const FinSet cb = complement(b, u);
        o.json["complement_a"] = render::set_json(ca);
        o.json["complement_b"] = render::set_json(cb);
        o.text += "complement of A: " + ca.str() + "\ncomplement of B: " + cb.str() + "\n";
      }
      return o;
    });

    c = leaf(st, "power", "Power set");
    auto& ps = str();
    c->add_option("A", ps)->required();
    on(c, [&] {
      const auto p = powerset(parse_set(lit(ps)));
      Output o;
      Json subsets = Json::array();
      o.text = std::to_string(p.size()) + " subsets\n";
      for (const auto& s : p) {
        subsets.push_back(render::set_json(s));
        o.text += s.str() + "\n";
      }
      o.json = Json{{"size", p.size()}, {"subsets", subsets}};
      return o;
    });

    c = leaf(st, "cart", "Cartesian product");
    auto& ca = str();
    auto& cb = str();
    c->add_option("A", ca)->required();
    c->add_option("B", cb)->required();
    on(c, [&] {
      const auto p = cartesian(parse_set(lit(ca)), parse_set(lit(cb)));
      return Output{Json{{"size", p.size()}, {"pairs", render::pairs_json(p)}}, render::pairs_text(p) + "\n"};
    });

    c = leaf(st, "venn3", "Three-set inclusion-exclusion; give --total or --c");
    auto* o_total = c->add_option("--total", "|A u B u C|");
    auto* o_a = c->add_option("--a", "|A|")->required();
    auto* o_b = c->add_option("--b", "|B|")->required();
    auto* o_c = c->add_option("--c", "|C|");
    auto* o_ab = c->add_option("--ab", "|A n B|")->required();
    auto* o_bc = c->add_option("--bc", "|B n C|")->required();
    auto* o_ac = c->add_option("--ac", "|A n C|")->required();
    auto* o_abc = c->add_option("--abc", "|A n B n C|")->required();
    on(c, [=] {
      auto get = [](CLI::Option* opt) { return small_int(opt->as<std::string>()); };
      if ((o_total->count() > 0) == (o_c->count() > 0)) {
        throw ParseError("give exactly one of --total and --c", 0);
      }
      const VennCounts v = o_total->count() > 0
                               ? three_set_counts(get(o_total), get(o_a), get(o_b), get(o_ab), get(o_bc), get(o_ac), get(o_abc))
                               : three_set_union(get(o_a), get(o_b), get(o_c), get(o_ab), get(o_ac), get(o_bc), get(o_abc));
      Output o;
      o.json = Json{{"total", v.total}, {"a", v.a}, {"b", v.b}, {"c", v.c},
                    {"only_a", v.only_a}, {"only_b", v.only_b}, {"only_c", v.only_c},
                    {"ab_only", v.ab_only}, {"bc_only", v.bc_only}, {"ac_only", v.ac_only}, {"abc", v.abc}};
      o.text = "|A u B u C| = " + std::to_string(v.total) + "\n|A| = " + std::to_string(v.a) +
               ", |B| = " + std::to_string(v.b) + ", |C| = " + std::to_string(v.c) +
               "\nonly A: " + std::to_string(v.only_a) + ", only B: " + std::to_string(v.only_b) +
               ", only C: " + std::to_string(v.only_c) + "\nA and B only: " + std::to_string(v.ab_only) +
               ", B and C only: " + std::to_string(v.bc_only) + ", A and C only: " + std::to_string(v.ac_only) +
               "\nall three: " + std::to_string(v.abc) + "\n";
      return o;
    });
  }

  // ---- rel
  {
    CLI::App* rl = group("rel", "Binary relations and mappings");

    auto* c = leaf(rl, "props", "Reflexive, symmetric, transitive, ... on one set");
    auto& ps = str();
    auto& pp = str();
    c->add_option("set", ps)->required();
    c->add_option("pairs", pp)->required();
    on(c, [&] {
      const Relation r(parse_set(lit(ps)), parse_pairs(lit(pp)));
      const RelationProperties p = rel_properties(r);
      const bool eq = p.reflexive && p.symmetric && p.transitive;
      const bool po = p.reflexive && p.antisymmetric && p.transitive;
      Output o;
      o.json = Json{{"reflexive", p.reflexive}, {"antireflexive", p.antireflexive}, {"symmetric", p.symmetric},
                    {"antisymmetric", p.antisymmetric}, {"transitive", p.transitive},
                    {"equivalence", eq}, {"partial_order", po},
                    {"domain", render::set_json(r.domain())}, {"range", render::set_json(r.range())}};
      o.text = "reflexive: " + yes_no(p.reflexive) + "\nantireflexive: " + yes_no(p.antireflexive) +
               "\nsymmetric: " + yes_no(p.symmetric) + "\nantisymmetric: " + yes_no(p.antisymmetric) +
               "\ntransitive: " + yes_no(p.transitive) + "\nequivalence: " + yes_no(eq) +
               "\npartial order: " + yes_no(po) + "\ndomain: " + r.domain().str() + "\nrange: " + r.range().str() + "\n";
      return o;
    });

    c = leaf(rl, "classes", "Equivalence classes, or the distinct sections of any relation");
    auto& cs = str();
    auto& cp = str();
    c->add_option("set", cs)->required();
    c->add_option("pairs", cp)->required();
    on(c, [&] {
      const Relation r(parse_set(lit(cs)), parse_pairs(lit(cp)));
      const EquivalenceReport e = equivalence_analysis(r);
      const auto classes = e.is_equivalence ? e.classes : factor_set(r);
      Output o;
      Json arr = Json::array();
      o.text = e.is_equivalence ? "equivalence classes:\n" : "not an equivalence; distinct sections:\n";
      for (const auto& k : classes) {
        arr.push_back(render::set_json(k));
        o.text += k.str() + "\n";
      }
      o.json = Json{{"equivalence", e.is_equivalence}, {"classes", arr}};
      return o;
    });

    c = leaf(rl, "compose", "Product r rho of rho in A x B and r in B x C");
    auto& xa = str();
    auto& xb = str();
    auto& xc = str();
    auto& xrho = str();
    auto& xr = str();
    c->add_option("A", xa)->required();
    c->add_option("B", xb)->required();
    c->add_option("C", xc)->required();
    c->add_option("rho", xrho)->required();
    c->add_option("r", xr)->required();
    on(c, [&] {
      const FinSet b = parse_set(lit(xb));
      const Relation rho(parse_set(lit(xa)), b, parse_pairs(lit(xrho)));
      const Relation r(b, parse_set(lit(xc)), parse_pairs(lit(xr)));
      const Relation p = rel_compose(rho, r);
      return Output{Json{{"pairs", render::pairs_json(p.pairs())}}, p.str() + "\n"};
    });

    c = leaf(rl, "inverse", "Inverse relation");
    auto& ia = str();
    auto& ib = str();
    auto& ip = str();
    c->add_option("A", ia)->required();
    c->add_option("B", ib)->required();
    c->add_option("pairs", ip)->required();
    on(c, [&] {
      const Relation inv = rel_inverse(Relation(parse_set(lit(ia)), parse_set(lit(ib)), parse_pairs(lit(ip))));
      return Output{Json{{"pairs", render::pairs_json(inv.pairs())}}, inv.str() + "\n"};
    });

    c = leaf(rl, "function", "Function, injection, surjection, bijection tests");
    auto& fa = str();
    auto& fb = str();
    auto& fp = str();
    c->add_option("A", fa)->required();
    c->add_option("B", fb)->required();
    c->add_option("pairs", fp)->required();
    on(c, [&] {
      const Relation f(parse_set(lit(fa)), parse_set(lit(fb)), parse_pairs(lit(fp)));
      const FunctionReport r = fn_analysis(f);
      Output o;
      o.json = Json{{"function", r.is_function}, {"injective", r.injective}, {"surjective", r.surjective},
                    {"bijective", r.bijective}};
      o.text = "function: " + yes_no(r.is_function) + "\ninjective: " + yes_no(r.injective) +
               "\nsurjective: " + yes_no(r.surjective) + "\nbijective: " + yes_no(r.bijective) + "\n";
      if (r.bijective) {
        const Relation inv = fn_inverse(f);
        o.json["inverse"] = render::pairs_json(inv.pairs());
        o.text += "inverse: " + inv.str() + "\n";
      }
      return o;
    });
  }

  // ---- alg
  {
    CLI::App* al = group("alg", "Finite binary operations");

    struct MagmaInput {
      CLI::Option* mod_add;
      CLI::Option* mod_mul;
      CLI::Option* carrier;
      CLI::Option* table;
    };
    auto magma_options = [](CLI::App* c) {
      MagmaInput in{};
      in.mod_add = c->add_option("--mod-add", "({0..n-1}, +_n)");
      in.mod_mul = c->add_option("--mod-mul", "({0..n-1}, *_n)");
      in.carrier = c->add_option("--carrier", "Carrier labels, e.g. \"-1 1 i -i\"");
      in.table = c->add_option("--table", "Rows of entries separated by ';'");
      return in;
    };
    auto build = [](const MagmaInput& in) {
      if (in.mod_add->count()) return modular_addition(static_cast<std::size_t>(small_int(in.mod_add->as<std::string>())));
      if (in.mod_mul->count()) return modular_multiplication(static_cast<std::size_t>(small_int(in.mod_mul->as<std::string>())));
      if (!in.carrier->count() || !in.table->count()) {
        throw ParseError("give --mod-add, --mod-mul, or --carrier with --table", 0);
      }
      return parse_magma(in.carrier->as<std::string>(), in.table->as<std::string>());
    };

    auto* c = leaf(al, "cayley", "Print the Cayley table");
    const MagmaInput ci = magma_options(c);
    on(c, [=] {
      const Magma m = build(ci);
      return Output{magma_json(m), m.str()};
    });

    c = leaf(al, "classify", "Closure, associativity, neutral, inverses, structure");
    const MagmaInput ki = magma_options(c);
    on(c, [=] { return structure_output(build(ki)); });

    c = leaf(al, "distrib", "Does the second operation distribute over the first?");
    const MagmaInput di = magma_options(c);
    auto* mul_table = c->add_option("--mul-table", "Table of the second operation on the same carrier");
    on(c, [=] {
      Magma add = build(di);
      Magma mul = add;
      if (di.mod_add->count() && !mul_table->count()) {
        mul = modular_multiplication(add.size());
      } else if (mul_table->count()) {
        std::string carrier;
        for (const auto& l : add.labels()) carrier += l + " ";
        mul = parse_magma(carrier, mul_table->as<std::string>());
      } else {
        throw ParseError("give --mul-table, or --mod-add alone for (Z_n, +, *)", 0);
      }
      const bool d = check_distributive(add, mul);
      return Output{Json{{"distributive", d}}, d ? "distributive\n" : "not distributive\n"};
    });
  }

  // ---- cx
  {
    CLI::App* cx = group("cx", "Complex numbers");

    auto* c = leaf(cx, "arith", "z1 op z2 with op in + - * /");
    auto& z1 = str();
    auto& op = str();
    auto& z2 = str();
    c->add_option("z1", z1)->required();
    c->add_option("op", op)->required();
    c->add_option("z2", z2)->required();
    on(c, [&] {
      ComplexOp k;
      if (op == "+" || op == "add") k = ComplexOp::Add;
      else if (op == "-" || op == "sub") k = ComplexOp::Sub;
      else if (op == "*" || op == "mul") k = ComplexOp::Mul;
      else if (op == "/" || op == "div") k = ComplexOp::Div;
      else throw ParseError("unknown operator '" + op + "'", 0);
      const GaussianRational r = c_arith(GaussianRational::parse(lit(z1)), GaussianRational::parse(lit(z2)), k);
      return Output{render::complex_json(r), r.str() + "\n"};
    });

    c = leaf(cx, "polar", "Conjugate, modulus, argument and polar form");
    auto& pz = str();
    c->add_option("z", pz)->required();
    on(c, [&] {
      const GaussianRational z = GaussianRational::parse(lit(pz));
      Output o;
      const Rational m2 = modulus_sq(z);
      o.json = Json{{"z", render::complex_json(z)}, {"conj", render::complex_json(conj(z))},
                    {"modulus_sq", render::rat_json(m2)}, {"modulus", modulus(z)}};
      o.text = "conj = " + conj(z).str() + "\n|z|^2 = " + m2.str() + "\n|z| = " + render::num(modulus(z)) + "\n";
      if (!z.is_zero()) {
        const Polar p = to_polar(z);
        o.json["arg_principal"] = arg_principal(z);
        o.json["polar"] = render::polar_json(p);
        o.text += "arg (principal) = " + render::num(arg_principal(z)) + "\npolar: " + render::polar_text(p) + "\n";
      }
      return o;
    });

    c = leaf(cx, "pow", "Exact integer power z^n");
    auto& wz = str();
    auto& wn = str();
    c->add_option("z", wz)->required();
    c->add_option("n", wn)->required();
    on(c, [&] {
      const GaussianRational z = GaussianRational::parse(lit(wz));
      const GaussianRational r = pow(z, small_int(wn));
      return Output{render::complex_json(r), r.str() + "\n"};
    });

    c = leaf(cx, "roots", "The n distinct n-th roots");
    auto& rz = str();
    auto& rn = str();
    c->add_option("z", rz)->required();
    c->add_option("n", rn)->required();
    on(c, [&] {
      const auto roots = roots_n(GaussianRational::parse(lit(rz)), small_int(rn));
      Output o;
      Json arr = Json::array();
      for (std::size_t k = 0; k < roots.size(); ++k) {
        arr.push_back(render::polar_json(roots[k]));
        o.text += "w" + std::to_string(k) + ": " + render::polar_text(roots[k]) + "\n";
      }
      o.json = Json{{"roots", arr}};
      return o;
    });
  }

  // ---- mat
  {
    CLI::App* mt = group("mat", "Rational matrices and determinants");

    auto* c = leaf(mt, "arith", "add|sub|mul A B, scale k A, transpose A");
    auto& mop = str();
    auto& ma = str();
    auto& mb = str();
    c->add_option("op", mop)->required();
    c->add_option("A", ma)->required();
    c->add_option("B", mb);
    on(c, [&] {
      Matrix r = Matrix::identity(1);
      if (mop == "transpose") {
        r = transpose(Matrix::parse(lit(ma)));
      } else {
        if (mb.empty()) throw ParseError("operation '" + mop + "' needs two operands", 0);
        if (mop == "scale") r = scale(Rational::parse(ma), Matrix::parse(lit(mb)));
        else if (mop == "add" || mop == "+") r = Matrix::parse(lit(ma)) + Matrix::parse(lit(mb));
        else if (mop == "sub" || mop == "-") r = Matrix::parse(lit(ma)) - Matrix::parse(lit(mb));
        else if (mop == "mul" || mop == "*") r = Matrix::parse(lit(ma)) * Matrix::parse(lit(mb));
        else throw ParseError("unknown matrix operation '" + mop + "'", 0);
      }
      return Output{render::matrix_json(r), r.str()};
    });

    c = leaf(mt, "det", "Determinant");
    auto& da = str();
    auto& method = str();
    method = "elimination";
    c->add_option("A", da)->required();
    c->add_option("-m,--method", method, "laplace, elimination or sarrus3")->capture_default_str();
    on(c, [&] {
      const Rational d = det(Matrix::parse(lit(da)), parse_det_method(method));
      return Output{Json{{"det", render::rat_json(d)}}, d.str() + "\n"};
    });

    c = leaf(mt, "minor", "Minor and cofactor of entry (i, j), 1-based");
    auto& na = str();
    auto& ni = str();
    auto& nj = str();
    c->add_option("A", na)->required();
    c->add_option("i", ni)->required();
    c->add_option("j", nj)->required();
    on(c, [&] {
      const Matrix a = Matrix::parse(lit(na));
      const std::int64_t i = small_int(ni);
      const std::int64_t j = small_int(nj);
      if (i < 1 || j < 1) fail(ErrorCode::IndexOutOfRange, "indices start at 1");
      const auto ui = static_cast<std::size_t>(i - 1);
      const auto uj = static_cast<std::size_t>(j - 1);
      const Rational m = minor(a, ui, uj);
      const Rational k = cofactor(a, ui, uj);
      return Output{Json{{"minor", render::rat_json(m)}, {"cofactor", render::rat_json(k)}},
                    "minor = " + m.str() + ", cofactor = " + k.str() + "\n"};
    });

    c = leaf(mt, "adj", "Cofactor matrix and adjugate");
    auto& aa = str();
    c->add_option("A", aa)->required();
    on(c, [&] {
      const Matrix a = Matrix::parse(lit(aa));
      const Matrix cof = cofactor_matrix(a);
      const Matrix adj = transpose(cof);
      return Output{Json{{"cofactors", render::matrix_json(cof)}, {"adjugate", render::matrix_json(adj)}},
                    "cofactors:\n" + cof.str() + "adjugate:\n" + adj.str()};
    });

    c = leaf(mt, "inverse", "Inverse matrix");
    auto& ia = str();
    c->add_option("A", ia)->required();
    on(c, [&] {
      const Matrix inv = inverse(Matrix::parse(lit(ia)));
      return Output{render::matrix_json(inv), inv.str()};
    });

    c = leaf(mt, "rank", "Rank via elementary row operations");
    auto& ra = str();
    c->add_option("A", ra)->required();
    on(c, [&] {
      const EchelonReport r = rank(Matrix::parse(lit(ra)));
      Output o;
      Json pivots = Json::array();
      for (std::size_t p : r.pivot_cols) pivots.push_back(p + 1);
      o.json = Json{{"rank", r.rank}, {"pivot_cols", pivots}, {"echelon", render::matrix_json(r.echelon)}, {"ops", r.op_log}};
      o.text = "rank = " + std::to_string(r.rank) + "\n" + r.echelon.str();
      if (!r.op_log.empty()) {
        o.text += "ops:";
        for (const auto& s : r.op_log) o.text += " " + s;
        o.text += "\n";
      }
      return o;
    });

    c = leaf(mt, "solveq", "Solve AX = B (left) or XA = B (right)");
    auto& side = str();
    auto& sa = str();
    auto& sb = str();
    side = "left";
    c->add_option("-s,--side", side, "left or right")->capture_default_str();
    c->add_option("A", sa)->required();
    c->add_option("B", sb)->required();
    on(c, [&] {
      EquationSide s;
      if (side == "left") s = EquationSide::Left;
      else if (side == "right") s = EquationSide::Right;
      else throw ParseError("side must be left or right", 0);
      const Matrix x = solve_matrix_equation(s, Matrix::parse(lit(sa)), Matrix::parse(lit(sb)));
      return Output{render::matrix_json(x), x.str()};
    });
  }

  // ---- sys
  {
    CLI::App* sy = group("sys", "Systems of linear equations, input \"A | b\"");
    auto sys_leaf = [&](const std::string& name, const std::string& desc,
                        std::function<Output(const LinearSystem&)> fn) {
      auto* c = leaf(sy, name, desc);
      auto& text = str();
      auto* aug = c->add_flag("--augmented", "Input is one augmented matrix (A|b)");
      c->add_option("system", text)->required();
      on(c, [&, aug, fn] { return fn(parse_system(lit(text), aug->count() > 0)); });
    };

    sys_leaf("classify", "Kronecker-Capelli classification", [](const LinearSystem& s) {
      const ConsistencyReport r = classify(s);
      const std::string v(to_string(r.verdict));
      return Output{Json{{"rank_a", r.rank_a}, {"rank_ab", r.rank_ab}, {"unknowns", r.unknowns}, {"verdict", v}},
                    "rank(A) = " + std::to_string(r.rank_a) + ", rank(A|b) = " + std::to_string(r.rank_ab) +
                        ", unknowns = " + std::to_string(r.unknowns) + ": " + v + "\n"};
    });
    sys_leaf("gauss", "Gaussian elimination", [](const LinearSystem& s) {
      const SolutionSet r = solve_gauss(s);
      return Output{render::solution_json(r), render::solution_text(r)};
    });
    sys_leaf("cramer", "Cramer's rule", [](const LinearSystem& s) {
      const SolutionSet r = solve_cramer(s);
      return Output{render::solution_json(r), render::solution_text(r)};
    });
    sys_leaf("invmethod", "x = A^-1 b", [](const LinearSystem& s) {
      const SolutionSet r = solve_inverse_method(s);
      return Output{render::solution_json(r), render::solution_text(r)};
    });

    auto* c = leaf(sy, "homogeneous", "Does A x = 0 have nontrivial solutions?");
    auto& ha = str();
    c->add_option("A", ha)->required();
    on(c, [&] {
      const HomogeneousReport r = homogeneous_analysis(Matrix::parse(lit(ha)));
      Json j = render::solution_json(r.solutions);
      return Output{Json{{"trivial_only", r.trivial_only}, {"solutions", j}},
                    r.trivial_only ? "trivial solution only\n"
                                   : "nontrivial solutions:\n" + render::solution_text(r.solutions)};
    });
  }

  // ---- geo
  {
    CLI::App* ge = group("geo", "Vectors, planes and lines in space");

    auto* c = leaf(ge, "vec", "Products and measures of two or three vectors");
    auto& vecs = list();
    c->add_option("vectors", vecs, "Two or three vectors")->required()->expected(2, 3);
    on(c, [&] {
      std::vector<Vec3> v;
      for (const auto& s : vecs) v.push_back(Vec3::parse(lit(s)));
      const Vec3& a = v[0];
      const Vec3& b = v[1];
      Output o;
      o.json = Json{{"dot", render::rat_json(dot(a, b))}, {"cross", render::vec_json(cross(a, b))},
                    {"norm_sq_a", render::rat_json(norm_sq(a))}, {"norm_sq_b", render::rat_json(norm_sq(b))},
                    {"collinear", collinear(a, b)}};
      o.text = "a.b = " + dot(a, b).str() + "\na x b = " + cross(a, b).str() + "\n|a|^2 = " + norm_sq(a).str() +
               ", |a| = " + render::num(norm(a)) + "\n|b|^2 = " + norm_sq(b).str() + ", |b| = " + render::num(norm(b)) +
               "\n|a x b|^2 = " + parallelogram_area_sq(a, b).str() + "\ncollinear: " + yes_no(collinear(a, b)) + "\n";
      if (!a.is_zero() && !b.is_zero()) {
        o.json["angle"] = angle(a, b);
        o.json["proj_a_on_b"] = proj_scalar(a, b);
        o.text += "angle = " + render::num(angle(a, b)) + " rad (" + render::num(degrees(angle(a, b))) +
                  " deg)\nproj of a on b = " + render::num(proj_scalar(a, b)) + "\n";
      }
      if (v.size() == 3) {
        const Rational m = mixed(a, b, v[2]);
        o.json["mixed"] = render::rat_json(m);
        o.json["coplanar"] = m.is_zero();
        o.text += "(a x b).c = " + m.str() + "\ncoplanar: " + yes_no(m.is_zero()) +
                  "\nindependent: " + yes_no(!m.is_zero()) + "\n";
      }
      return o;
    });

    c = leaf(ge, "decompose", "Coefficients of a vector in a basis of 2 or 3 vectors");
    auto& dt = str();
    auto& basis = list();
    c->add_option("target", dt)->required();
    c->add_option("basis", basis)->required()->expected(2, 3);
    on(c, [&] {
      std::vector<Vec3> b;
      for (const auto& s : basis) b.push_back(Vec3::parse(lit(s)));
      const auto k = decompose(Vec3::parse(lit(dt)), b);
      return Output{Json{{"coefficients", render::rats_json(k)}}, render::list_text(k) + "\n"};
    });

    c = leaf(ge, "triangle", "Sides, angles, area, heights of triangle ABC");
    auto& tri = list();
    c->add_option("points", tri)->required()->expected(3);
    on(c, [&] {
      const TriangleMeasures t = triangle_measures(Vec3::parse(lit(tri[0])), Vec3::parse(lit(tri[1])), Vec3::parse(lit(tri[2])));
      Output o;
      o.json = Json{{"sides_sq", render::rats_json({t.side_sq_a, t.side_sq_b, t.side_sq_c})},
                    {"area_sq", render::rat_json(t.area_sq)}, {"area", t.area}, {"perimeter", t.perimeter},
                    {"angles", {t.angle_a, t.angle_b, t.angle_c}},
                    {"heights_sq", render::rats_json({t.height_sq_a, t.height_sq_b, t.height_sq_c})}};
      o.text = "a^2 = " + t.side_sq_a.str() + ", b^2 = " + t.side_sq_b.str() + ", c^2 = " + t.side_sq_c.str() +
               "\narea = " + render::num(t.area) + " (area^2 = " + t.area_sq.str() + ")\nperimeter = " +
               render::num(t.perimeter) + "\nangles = " + render::num(t.angle_a) + ", " + render::num(t.angle_b) +
               ", " + render::num(t.angle_c) + " rad\nh_a^2 = " + t.height_sq_a.str() + ", h_b^2 = " +
               t.height_sq_b.str() + ", h_c^2 = " + t.height_sq_c.str() + "\n";
      return o;
    });

    c = leaf(ge, "tetra", "Volume and height of tetrahedron ABCD");
    auto& tet = list();
    c->add_option("points", tet)->required()->expected(4);
    on(c, [&] {
      const TetraMeasures t = tetra_measures(Vec3::parse(lit(tet[0])), Vec3::parse(lit(tet[1])),
                                             Vec3::parse(lit(tet[2])), Vec3::parse(lit(tet[3])));
      return Output{Json{{"volume", render::rat_json(t.volume)},
                         {"parallelepiped_volume", render::rat_json(t.parallelepiped_volume)},
                         {"height_sq", render::rat_json(t.height_sq)}, {"height", t.height}},
                    "V = " + t.volume.str() + " (parallelepiped " + t.parallelepiped_volume.str() + ")\nh_D = " +
                        render::num(t.height) + " (h_D^2 = " + t.height_sq.str() + ")\n"};
    });

    c = leaf(ge, "plane", "Plane from coefficients, three points, or point and normal");
    auto& coeffs = str();
    auto& points = list();
    auto& ppoint = str();
    auto& pnormal = str();
    c->add_option("coefficients", coeffs, "\"A B C D\"");
    c->add_option("--points", points, "Three points")->expected(3);
    c->add_option("--point", ppoint);
    c->add_option("--normal", pnormal);
    on(c, [&] {
      std::optional<Plane> p;
      if (!points.empty()) p = plane_three_points(Vec3::parse(lit(points[0])), Vec3::parse(lit(points[1])), Vec3::parse(lit(points[2])));
      else if (!ppoint.empty() && !pnormal.empty()) p = plane_point_normal(Vec3::parse(lit(ppoint)), Vec3::parse(lit(pnormal)));
      else if (!coeffs.empty()) p = Plane::parse(lit(coeffs));
      else throw ParseError("give coefficients, --points, or --point with --normal", 0);
      return plane_output(*p);
    });

    c = leaf(ge, "line", "Line from a literal, two points, or two planes");
    auto& ltext = str();
    auto& lpoints = list();
    auto& lplanes = list();
    auto& at = str();
    c->add_option("line", ltext, "\"point=(..) dir=(..)\" or canonical form");
    c->add_option("--points", lpoints)->expected(2);
    c->add_option("--planes", lplanes)->expected(2);
    c->add_option("--at", at, "Also evaluate the parametric form at t");
    on(c, [&] {
      std::optional<Line> l;
      if (!lpoints.empty()) l = line_two_points(Vec3::parse(lit(lpoints[0])), Vec3::parse(lit(lpoints[1])));
      else if (!lplanes.empty()) l = line_from_planes(Plane::parse(lit(lplanes[0])), Plane::parse(lit(lplanes[1])));
      else if (!ltext.empty()) l = Line::parse(lit(ltext));
      else throw ParseError("give a line, --points, or --planes", 0);
      Output o{line_json(*l), "canonical: " + l->str() + "\nparametric: " + line_parametric_text(*l) + "\n"};
      if (!at.empty()) {
        const Vec3 p = l->at(Rational::parse(at));
        o.json["at"] = render::vec_json(p);
        o.text += "point at t = " + Rational::parse(at).str() + ": " + p.str() + "\n";
      }
      return o;
    });

    c = leaf(ge, "relate", "Mutual position: planes P Q | lines L M | line-plane L P");
    auto& kind = str();
    auto& rx = str();
    auto& ry = str();
    c->add_option("kind", kind, "planes, lines or line-plane")->required();
    c->add_option("first", rx)->required();
    c->add_option("second", ry)->required();
    on(c, [&] {
      Output o;
      if (kind == "planes") {
        const PlanesRelation r = planes_relation(Plane::parse(lit(rx)), Plane::parse(lit(ry)));
        o.json = Json{{"cos_angle", r.cos_angle}, {"angle", r.angle}, {"parallel", r.parallel},
                      {"perpendicular", r.perpendicular}, {"identical", r.identical},
                      {"intersection", r.intersection ? line_json(*r.intersection) : Json(nullptr)}};
        o.text = "angle = " + render::num(r.angle) + " rad (" + render::num(degrees(r.angle)) + " deg)\nparallel: " +
                 yes_no(r.parallel) + "\nperpendicular: " + yes_no(r.perpendicular) + "\nidentical: " + yes_no(r.identical) + "\n";
        if (r.intersection) o.text += "intersection: " + r.intersection->str() + "\n";
      } else if (kind == "lines") {
        const LinesRelation r = lines_relation(Line::parse(lit(rx)), Line::parse(lit(ry)));
        o.json = Json{{"kind", std::string(to_string(r.kind))}, {"cos_angle", r.cos_angle}, {"angle", r.angle},
                      {"perpendicular", r.perpendicular},
                      {"point", r.point ? render::vec_json(*r.point) : Json(nullptr)},
                      {"distance", r.distance ? distance_json(*r.distance) : Json(nullptr)}};
        o.text = std::string(to_string(r.kind)) + "\nangle = " + render::num(r.angle) + " rad\nperpendicular: " +
                 yes_no(r.perpendicular) + "\n";
        if (r.point) o.text += "point: " + r.point->str() + "\n";
        if (r.distance) o.text += distance_text(*r.distance) + "\n";
      } else if (kind == "line-plane") {
        const LinePlaneRelation r = line_plane_relation(Line::parse(lit(rx)), Plane::parse(lit(ry)));
        o.json = Json{{"kind", std::string(to_string(r.kind))}, {"perpendicular", r.perpendicular},
                      {"sin_angle", r.sin_angle},
                      {"parameter", r.parameter ? render::rat_json(*r.parameter) : Json(nullptr)},
                      {"point", r.point ? render::vec_json(*r.point) : Json(nullptr)}};
        o.text = std::string(to_string(r.kind)) + "\n";
        if (r.point) o.text += "t = " + r.parameter->str() + ", point: " + r.point->str() + "\n";
        o.text += "sin(angle) = " + render::num(r.sin_angle) + "\nperpendicular: " + yes_no(r.perpendicular) + "\n";
      } else {
        throw ParseError("kind must be planes, lines or line-plane", 0);
      }
      return o;
    });

    c = leaf(ge, "dist", "Distance: point-plane PT P | point-line PT L | lines L M");
    auto& dk = str();
    auto& dx = str();
    auto& dy = str();
    c->add_option("kind", dk, "point-plane, point-line or lines")->required();
    c->add_option("first", dx)->required();
    c->add_option("second", dy)->required();
    on(c, [&] {
      Distance d;
      if (dk == "point-plane") {
        d = point_plane_distance(Vec3::parse(lit(dx)), Plane::parse(lit(dy)));
      } else if (dk == "point-line") {
        d = point_line_distance(Vec3::parse(lit(dx)), Line::parse(lit(dy)));
      } else if (dk == "lines") {
        const LinesRelation r = lines_relation(Line::parse(lit(dx)), Line::parse(lit(dy)));
        d = r.distance ? *r.distance : Distance{};
      } else {
        throw ParseError("kind must be point-plane, point-line or lines", 0);
      }
      return Output{distance_json(d), distance_text(d) + "\n"};
    });
  }

  // ---- mix
  {
    CLI::App* mx = group("mix", "Proportions, percentages and mixtures");

    auto* c = leaf(mx, "prop", "Solve a : b = c : d for x, e.g. \"x+9\" 6 x 5");
    auto& pa = str();
    auto& pb = str();
    auto& pc = str();
    auto& pd = str();
    c->add_option("a", pa)->required();
    c->add_option("b", pb)->required();
    c->add_option("c", pc)->required();
    c->add_option("d", pd)->required();
    on(c, [&] {
      const Rational x = solve_proportion(parse_affine(pa), Rational::parse(pb), parse_affine(pc), Rational::parse(pd));
      return Output{Json{{"x", render::rat_json(x)}}, "x = " + x.str() + "\n"};
    });

    c = leaf(mx, "split", "Split a total in the ratio w1 : w2 : ...");
    auto& st = str();
    auto& sw = list();
    c->add_option("total", st)->required();
    c->add_option("weights", sw)->required();
    on(c, [&] {
      std::vector<Rational> w;
      for (const auto& s : sw) w.push_back(Rational::parse(s));
      const auto parts = extended_split(Rational::parse(st), w);
      return Output{Json{{"parts", render::rats_json(parts)}}, render::list_text(parts) + "\n"};
    });

    c = leaf(mx, "percent", "G : 100 = I : p; omit the unknown");
    auto* og = c->add_option("-G,--base", "Base value G");
    auto* oi = c->add_option("-I,--part", "Percentage value I");
    auto* op = c->add_option("-p,--percent", "Rate p, '%' optional");
    on(c, [=] {
      auto opt = [](CLI::Option* o, bool pct) -> std::optional<Rational> {
        if (!o->count()) return std::nullopt;
        return pct ? percent_value(o->as<std::string>()) : Rational::parse(o->as<std::string>());
      };
      const auto g = opt(og, false);
      const auto i = opt(oi, false);
      const auto p = opt(op, true);
      const Rational r = percent_solve(g, i, p);
      const char* name = !g ? "G" : !i ? "I" : "p";
      const std::string unit = !p ? "%" : "";
      return Output{Json{{"unknown", name}, {"value", render::rat_json(r)}},
                    std::string(name) + " = " + r.decimal(2) + unit + (r.is_integer() ? "" : " (" + r.str() + ")") + "\n"};
    });

    c = leaf(mx, "chain", "Successive percentage changes; give --start or --final");
    auto* os = c->add_option("--start");
    auto* of = c->add_option("--final");
    auto& deltas = list();
    c->add_option("deltas", deltas, "Signed percentage changes, e.g. -10 15");
    on(c, [=, &deltas] {
      std::vector<Rational> d;
      for (const auto& s : deltas) d.push_back(percent_value(s));
      auto opt = [](CLI::Option* o) -> std::optional<Rational> {
        if (!o->count()) return std::nullopt;
        return Rational::parse(o->as<std::string>());
      };
      const Rational r = percent_chain(opt(os), opt(of), d);
      const char* name = os->count() ? "final" : "start";
      return Output{Json{{"unknown", name}, {"value", render::rat_json(r)}},
                    std::string(name) + " = " + r.decimal(2) + (r.is_integer() ? "" : " (" + r.str() + ")") + "\n"};
    });

    c = leaf(mx, "simple", "Amounts of two components s1, s2 giving total at intensity s");
    auto& s1 = str();
    auto& s2 = str();
    auto& s = str();
    auto& total = str();
    c->add_option("s1", s1)->required();
    c->add_option("s2", s2)->required();
    c->add_option("s", s)->required();
    c->add_option("total", total)->required();
    on(c, [&] {
      const MixtureSplit m = simple_mixture(percent_value(s1), percent_value(s2), percent_value(s), Rational::parse(total));
      return Output{Json{{"x1", render::rat_json(m.x1)}, {"x2", render::rat_json(m.x2)}, {"degenerate", m.degenerate}},
                    "x1 = " + m.x1.str() + ", x2 = " + m.x2.str() + (m.degenerate ? " (any split works)" : "") + "\n"};
    });

    c = leaf(mx, "intensity", "Missing intensity s2 from x1 at s1, x2, and target s");
    auto& mx1 = str();
    auto& ms1 = str();
    auto& mx2 = str();
    auto& ms = str();
    c->add_option("x1", mx1)->required();
    c->add_option("s1", ms1)->required();
    c->add_option("x2", mx2)->required();
    c->add_option("s", ms)->required();
    on(c, [&] {
      const Rational r = mixture_missing_intensity(Rational::parse(mx1), percent_value(ms1), Rational::parse(mx2), percent_value(ms));
      return Output{Json{{"s2", render::rat_json(r)}}, "s2 = " + r.str() + "\n"};
    });

    c = leaf(mx, "star", "Star-scheme mixture of several components");
    auto* ot = c->add_option("-t,--target", "Target intensity")->required();
    auto* ox = c->add_option("-x,--total", "Total amount")->required();
    auto& values = list();
    c->add_option("values", values)->required();
    on(c, [=, &values] {
      std::vector<Rational> v;
      for (const auto& t : values) v.push_back(percent_value(t));
      const auto amounts = star_scheme(v, percent_value(ot->as<std::string>()), Rational::parse(ox->as<std::string>()));
      return Output{Json{{"amounts", render::rats_json(amounts)}}, render::list_text(amounts) + "\n"};
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (!action) {
      err << "error: no command given\n";
      return kUsageError;
    }
    const Output o = action();
    if (json) {
      out << o.json.dump(2) << "\n";
    } else {
      out << o.text;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

Run run(const std::vector<std::string>& args, std::string_view stdin_text) {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in{std::string(stdin_text)};
  Run r;
  r.status = dispatch(args, out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace exactkit::cli
