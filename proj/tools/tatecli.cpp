#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tate/cech.hpp"
#include "tate/gallery.hpp"
#include "tate/ringfile.hpp"

using namespace tate;

namespace {

TateRingDesc resolve_ring(const std::string& arg) {
  if (auto id = example_from_name(arg)) return build_example(*id).ring;
  return parse_ring_file(arg);
}

Rat parse_cli_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rat(Int(s.substr(0, slash))) / Rat(den);
}

CheckStatus tri_status(Tri t) {
  switch (t) {
    case Tri::Yes: return CheckStatus::Pass;
    case Tri::No: return CheckStatus::Fail;
    default: return CheckStatus::Inconclusive;
  }
}

const char* verdict_word(GaugeVerdict::Status s) {
  switch (s) {
    case GaugeVerdict::Status::Exact: return "exact";
    case GaugeVerdict::Status::AtMost: return "at_most";
    case GaugeVerdict::Status::MinusInfCertified: return "minus_inf_certified";
    case GaugeVerdict::Status::PlusInf: return "plus_inf";
    default: return "inconclusive";
  }
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s.empty() ? "-" : s;
}

std::optional<ExampleId> section_example(const std::string& section) {
  if (section == "4.1") return ExampleId::Ex41;
  if (section == "4.2") return ExampleId::Ex42;
  if (section == "4.3") return ExampleId::Ex43;
  if (section == "4.4") return ExampleId::Ex44;
  if (section == "4.5") return ExampleId::Ex45;
  if (section == "4.6") return ExampleId::Ex46;
  return std::nullopt;
}

AlainRelation parse_relation(const std::string& spec, const VarTablePtr& table,
                             std::size_t arity) {
  // i;d;coeff:deg,deg,...|coeff:deg,deg,...
  auto semi1 = spec.find(';');
  auto semi2 = spec.find(';', semi1 == std::string::npos ? semi1 : semi1 + 1);
  if (semi1 == std::string::npos || semi2 == std::string::npos)
    throw std::invalid_argument("relation must look like 'i;d;coeff:degs|...'");
  AlainRelation rel;
  rel.i = std::stoul(spec.substr(0, semi1));
  rel.d = std::stol(spec.substr(semi1 + 1, semi2 - semi1 - 1));
  std::string rest = spec.substr(semi2 + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    auto bar = rest.find('|', pos);
    std::string term = rest.substr(pos, bar == std::string::npos ? bar : bar - pos);
    auto colon = term.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("relation term must look like 'coeff:deg,deg'");
    AlainRelation::Term t{parse_element(term.substr(0, colon), table), {}};
    std::string degs = term.substr(colon + 1);
    std::size_t dp = 0;
    while (dp <= degs.size()) {
      auto comma = degs.find(',', dp);
      t.degs.push_back(
          std::stol(degs.substr(dp, comma == std::string::npos ? comma : comma - dp)));
      if (comma == std::string::npos) break;
      dp = comma + 1;
    }
    if (t.degs.size() != arity)
      throw std::invalid_argument("relation term degree list must match --t count");
    rel.terms.push_back(std::move(t));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return rel;
}

int emit_report(const Report& r) {
  std::cout << r.str();
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact diagnostics for monomially presented Tate rings"};
  app.require_subcommand(1);

  std::string ring_arg, monomial_arg, element_arg, t_arg;
  long horizon = 24, precision = 12, depth = 3, window = 4;
  std::string adjoin_mode;
  std::string adjoin_by;
  std::string power = "0";
  std::vector<std::string> t_list_arg, a_list_arg, rel_arg;
  std::string r_arg;
  std::string section;

  auto add_depths = [&](CLI::App* c) {
    c->add_option("--horizon", horizon, "certification depth for -inf claims");
    c->add_option("--precision", precision, "pi-adic precision for truncations");
  };

  auto* c_gauge = app.add_subcommand("gauge", "evaluate the gauge of a monomial");
  c_gauge->add_option("ring", ring_arg)->required();
  c_gauge->add_option("monomial", monomial_arg)->required();
  c_gauge->add_option("--adjoin", adjoin_mode, "t, 1/t or both")
      ->check(CLI::IsMember({"t", "1/t", "both"}));
  c_gauge->add_option("--by", adjoin_by, "monomial to adjoin");
  add_depths(c_gauge);

  auto* c_member = app.add_subcommand("member", "is the element in pi^n R0?");
  c_member->add_option("ring", ring_arg)->required();
  c_member->add_option("element", element_arg)->required();
  c_member->add_option("--power", power, "the exponent n")->required();
  add_depths(c_member);

  auto* c_pb = app.add_subcommand("powerbounded", "is the element power-bounded?");
  c_pb->add_option("ring", ring_arg)->required();
  c_pb->add_option("element", element_arg)->required();
  add_depths(c_pb);

  auto* c_uniform = app.add_subcommand("uniform", "uniformity scan over a window");
  c_uniform->add_option("ring", ring_arg)->required();
  c_uniform->add_option("--window", window, "monomial window radius");
  add_depths(c_uniform);

  auto* c_strict = app.add_subcommand("strict", "strictness of A0 n B0 over R0");
  c_strict->add_option("ring", ring_arg)->required();
  c_strict->add_option("--t", t_arg, "localization monomial")->required();
  c_strict->add_option("--window", window, "monomial window radius");
  add_depths(c_strict);

  auto* c_lz = app.add_subcommand("localzero", "monomials vanishing on both cover pieces");
  c_lz->add_option("ring", ring_arg)->required();
  c_lz->add_option("--t", t_arg, "localization monomial")->required();
  c_lz->add_option("--window", window, "monomial window radius");
  add_depths(c_lz);

  auto* c_alain = app.add_subcommand("alain", "explicit power-boundedness bound");
  c_alain->add_option("ring", ring_arg)->required();
  c_alain->add_option("--t", t_list_arg, "cover elements t_i")->required();
  c_alain->add_option("--a", a_list_arg, "partition coefficients a_i")->required();
  c_alain->add_option("--r", r_arg, "the element to bound")->required();
  c_alain->add_option("--rel", rel_arg, "relations 'i;d;coeff:degs|coeff:degs'");
  add_depths(c_alain);

  auto* c_laurent = app.add_subcommand("laurent-const", "Laurent-cover scaling constant");
  c_laurent->add_option("ring", ring_arg)->required();
  c_laurent->add_option("--t", t_list_arg, "cover elements t_i")->required();
  c_laurent->add_option("--a", a_list_arg, "partition coefficients a_i")->required();
  add_depths(c_laurent);

  auto* c_verify = app.add_subcommand("verify-paper", "run the example verification suites");
  c_verify->add_option("--section", section, "4.1 .. 4.6 (default: all plus criteria)");
  c_verify->add_option("--depth", depth, "recursion depth for 4.3");
  add_depths(c_verify);

  auto* c_emit = app.add_subcommand("emit", "print the canonical ring-file form");
  c_emit->add_option("ring", ring_arg)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    EvalParams p{horizon, 0, 0};
    Report rep;

    if (c_gauge->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      GaugePtr gauge = ring.gauge;
      if (!adjoin_by.empty()) {
        AdjoinDir dir = adjoin_mode == "1/t" ? AdjoinDir::NonPos
                        : adjoin_mode == "both" ? AdjoinDir::Both
                                                : AdjoinDir::NonNeg;
        gauge = std::make_shared<DerivedGauge>(
            gauge, std::vector<DerivedGauge::Adjunction>{
                       {parse_monomial(adjoin_by, ring.table), dir}});
      }
      ExponentVector e = parse_monomial(monomial_arg, ring.table);
      GaugeVerdict v = gauge->eval(e, p);
      bool certified = v.status == GaugeVerdict::Status::Exact ||
                       v.status == GaugeVerdict::Status::PlusInf ||
                       v.status == GaugeVerdict::Status::MinusInfCertified;
      auto& line = rep.add("gauge", certified ? CheckStatus::Pass
                                              : CheckStatus::Inconclusive);
      line.kv = {{"monomial", e.str()},
                 {"status", verdict_word(v.status)},
                 {"lower", v.lower.str()},
                 {"upper", v.upper.str()},
                 {"horizon", std::to_string(horizon)}};
      if (v.status == GaugeVerdict::Status::MinusInfCertified)
        line.kv.emplace_back("depth", std::to_string(v.depth));
      if (!v.witness_multiset.empty())
        line.kv.emplace_back("witness_multiset", join_indices(v.witness_multiset));
      return emit_report(rep);
    }

    if (c_member->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      RingElement x = parse_element(element_arg, ring.table);
      Tri t = membership(x, *ring.gauge, parse_cli_rat(power), p);
      auto& line = rep.add("member", tri_status(t));
      line.kv = {{"element", x.str()},
                 {"power", power},
                 {"answer", tri_str(t)},
                 {"horizon", std::to_string(horizon)}};
      return emit_report(rep);
    }

    if (c_pb->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      RingElement x = parse_element(element_arg, ring.table);
      BoundednessResult b = power_bounded(x, ring, p);
      auto& line = rep.add("powerbounded", tri_status(b.verdict));
      line.kv = {{"element", x.str()},
                 {"answer", tri_str(b.verdict)},
                 {"horizon", std::to_string(horizon)}};
      if (b.witness.term) line.kv.emplace_back("term", b.witness.term->str());
      return emit_report(rep);
    }

    if (c_uniform->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      UniformityResult u = uniformity(ring, window, p);
      CheckStatus st = u.verdict == UniformityResult::Verdict::Uniform
                           ? CheckStatus::Pass
                       : u.verdict == UniformityResult::Verdict::NonUniform
                           ? CheckStatus::Fail
                           : CheckStatus::Inconclusive;
      auto& line = rep.add("uniform", st);
      line.kv = {{"window", std::to_string(window)},
                 {"horizon", std::to_string(horizon)}};
      if (st == CheckStatus::Pass) line.kv.emplace_back("n", std::to_string(u.n));
      if (u.witness) line.kv.emplace_back("witness", u.witness->str());
      if (!u.detail.empty()) line.kv.emplace_back("detail", u.detail);
      return emit_report(rep);
    }

    if (c_strict->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      auto triple = build_triple(ring, parse_monomial(t_arg, ring.table));
      StrictnessResult s = strictness_check(triple, window, p);
      CheckStatus st = s.verdict == StrictnessResult::Verdict::Holds
                           ? CheckStatus::Pass
                       : s.verdict == StrictnessResult::Verdict::Fails
                           ? CheckStatus::Fail
                           : CheckStatus::Inconclusive;
      auto& line = rep.add("strict", st);
      line.kv = {{"t", t_arg},
                 {"window", std::to_string(window)},
                 {"horizon", std::to_string(horizon)}};
      if (st == CheckStatus::Pass) line.kv.emplace_back("n", s.n.str());
      if (!s.witnesses.empty())
        line.kv.emplace_back("witness", s.witnesses.front().str());
      if (!s.detail.empty()) line.kv.emplace_back("detail", s.detail);
      return emit_report(rep);
    }

    if (c_lz->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      auto triple = build_triple(ring, parse_monomial(t_arg, ring.table));
      auto sections = locally_zero_sections(triple, window, p);
      auto& head = rep.add("localzero", CheckStatus::Pass);
      head.kv = {{"count", std::to_string(sections.size())},
                 {"window", std::to_string(window)},
                 {"horizon", std::to_string(horizon)}};
      for (const auto& s : sections) {
        auto& line = rep.add("localzero.section", CheckStatus::Pass);
        line.kv = {{"witness", s.monomial.str()},
                   {"base_gauge", s.base_gauge.str()},
                   {"depth", std::to_string(s.certified_depth)},
                   {"nilpotent", s.nilpotent ? "yes" : "no"}};
      }
      return emit_report(rep);
    }

    if (c_alain->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      std::vector<RingElement> ts, as;
      for (const auto& s : t_list_arg) ts.push_back(parse_element(s, ring.table));
      for (const auto& s : a_list_arg) as.push_back(parse_element(s, ring.table));
      RingElement r = parse_element(r_arg, ring.table);
      std::vector<AlainRelation> rels;
      for (const auto& s : rel_arg) rels.push_back(parse_relation(s, ring.table, ts.size()));
      AlainCertificate cert = alain_bound(ring, ts, as, r, rels, p);
      auto& line = rep.add("alain", cert.valid && cert.powers_ok == Tri::Yes
                                        ? CheckStatus::Pass
                                    : cert.powers_ok == Tri::No ? CheckStatus::Fail
                                                                : CheckStatus::Inconclusive);
      line.kv = {{"A", std::to_string(cert.A)},
                 {"B", std::to_string(cert.B)},
                 {"N", std::to_string(cert.N)},
                 {"exponent", std::to_string(cert.exponent)},
                 {"powers_ok", tri_str(cert.powers_ok)},
                 {"horizon", std::to_string(horizon)}};
      if (!cert.detail.empty()) line.kv.emplace_back("detail", cert.detail);
      return emit_report(rep);
    }

    if (c_laurent->parsed()) {
      TateRingDesc ring = resolve_ring(ring_arg);
      std::vector<RingElement> ts, as;
      for (const auto& s : t_list_arg) ts.push_back(parse_element(s, ring.table));
      for (const auto& s : a_list_arg) as.push_back(parse_element(s, ring.table));
      LaurentConstant lc = laurent_constant(ring, ts, as, p);
      auto& line = rep.add("laurent_const", tri_status(lc.found));
      line.kv = {{"B", std::to_string(lc.B)},
                 {"c_exponent", std::to_string(lc.c_exponent)},
                 {"horizon", std::to_string(horizon)}};
      return emit_report(rep);
    }

    if (c_verify->parsed()) {
      std::vector<std::string> sections;
      if (section.empty())
        sections = {"4.1", "4.2", "4.3", "4.4", "4.5", "4.6"};
      else
        sections = {section};
      auto& head = rep.add("invocation", CheckStatus::Pass);
      head.kv = {{"horizon", std::to_string(horizon)},
                 {"precision", std::to_string(precision)},
                 {"depth", std::to_string(depth)}};
      for (const auto& s : sections) {
        auto id = section_example(s);
        if (!id) throw std::invalid_argument("unknown section '" + s + "'");
        rep.append(verify_proposition(*id, horizon, precision));
        if (*id == ExampleId::Ex41) {
          GalleryRing g = build_example(ExampleId::Ex41);
          auto triple = build_triple(g.ring, g.t);
          auto found = locally_zero_sections(triple, 2, p);
          auto& line = rep.add("locally_zero", !found.empty());
          if (!found.empty()) line.kv = {{"witness", found.front().monomial.str()}};
        }
      }
      if (section.empty()) rep.append(verify_positive_criteria(horizon));
      return emit_report(rep);
    }

    if (c_emit->parsed()) {
      std::cout << emit_ring(resolve_ring(ring_arg));
      return 0;
    }
  } catch (const RingParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
