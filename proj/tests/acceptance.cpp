// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "slie/capability.hpp"
#include "slie/catalog.hpp"
#include "slie/cli.hpp"
#include "slie/io.hpp"
#include "slie/multiplier.hpp"
#include "support.hpp"

using namespace slie;
using namespace slie::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (!ok) detail << "; ";
    else detail.str("");
    ok = false;
    detail << what;
  }
};

int failures = 0;

void report(int n, Outcome& o, const std::string& summary) {
  std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " - "
            << (o.ok ? summary : o.detail.str()) << "\n";
  if (!o.ok) ++failures;
}

bool flagged_as_printed(const CatalogEntry& e) {
  for (const auto& f : e.flags)
    if (f.rfind("as-printed", 0) == 0) return true;
  return false;
}

const CatalogEntry& by_number(int n) {
  const std::string prefix = "L" + std::to_string(n) + "_";
  for (const auto& e : load_catalog())
    if (e.id.rfind(prefix, 0) == 0) return e;
  throw std::runtime_error("no catalog entry " + prefix);
}

void both_engines(Outcome& o, const SuperAlgebra& a, const GradedDim& want, const std::string& label) {
  const auto t = multiplier_tags(a).dim, h = multiplier_homology(a).dim;
  if (t != want || h != want)
    o.fail(label + ": tags " + t.str() + ", homology " + h.str() + ", expected " + want.str());
}

void criterion1() {
  Outcome o;
  int checked = 0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; n <= 4; ++n) {
      if (m + n == 0) continue;
      const GradedDim want{(m * m + n * n + n - m) / 2, m * n};
      both_engines(o, abelian(m, n), want, "A(" + std::to_string(m) + "|" + std::to_string(n) + ")");
      ++checked;
    }
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; m + n <= 3; ++n) {
      if (m + n == 0) continue;
      const auto d = FamilyDescriptor::even_heisenberg(m, n);
      both_engines(o, build_canonical(d), multiplier_formula(d).dim, d.str());
      ++checked;
    }
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto d = FamilyDescriptor::odd_heisenberg(m);
    both_engines(o, build_canonical(d), multiplier_formula(d).dim, d.str());
    ++checked;
  }
  both_engines(o, heis(0, 1), {0, 0}, "H(0,1) special case");
  both_engines(o, heis(1, 0), {2, 0}, "H(1,0) special case");
  both_engines(o, odd_heis(1), {1, 1}, "H_1");
  both_engines(o, odd_heis(2), {4, 3}, "H_2");
  report(1, o, std::to_string(checked) + " family members, both engines match the closed formulas");
}

void criterion2() {
  Outcome o;
  const auto& a = by_number(27).algebra;
  const auto r = multiplier_tags(a);
  if (r.tag_count != 12) o.fail("tag count " + std::to_string(r.tag_count));
  if (r.absorbed.size() != 2) o.fail("absorbed " + std::to_string(r.absorbed.size()));
  if (r.relation_rank != 6) o.fail("relation rank " + std::to_string(r.relation_rank));
  if (r.dim.total() != 4) o.fail("dim M " + r.dim.str());
  const std::vector<std::string> want{"m2[x1,x3]", "m3[x1,x4]", "m7[x2,x5]", "m12[x5,x5]"};
  if (r.free_generators != want) {
    std::string got;
    for (const auto& g : r.free_generators) got += g + " ";
    o.fail("surviving generators " + got);
  }
  report(2, o, "12 tags, 2 absorbed, rank 6, dim M = 4, survivors m2 m3 m7 m12");
}

void criterion3() {
  Outcome o;
  const std::vector<std::pair<std::vector<int>, std::size_t>> table{
      {{24}, 6},         {{9, 10, 11, 12}, 1},     {{28, 30, 31, 32, 33, 34, 35}, 4},
      {{26}, 7},         {{27, 29, 36, 44}, 4},    {{37, 43}, 5},
      {{45, 46}, 3}};
  int checked = 0;
  for (const auto& [ids, want] : table)
    for (int id : ids) {
      const auto& e = by_number(id);
      const auto t = multiplier_tags(e.algebra).dim, h = multiplier_homology(e.algebra).dim;
      ++checked;
      if (t.total() != want || h.total() != want)
        o.fail(e.id + " computed " + t.str() + " = " + std::to_string(t.total()) + " (homology " +
               std::to_string(h.total()) + "), stated " + std::to_string(want));
    }
  report(3, o, std::to_string(checked) + " stated multiplier totals reproduced");
}

std::string lemma_text(const EpicenterTest& t) {
  return std::to_string(t.dim_M_quotient.total()) + (t.contained ? " = " : " != ") + std::to_string(t.dim_M_L.total()) +
         " + " + std::to_string(t.dim_N_cap_L2);
}

void criterion4() {
  Outcome o;
  const auto& l9 = by_number(9).algebra;
  const auto t9 = epicenter_contains(l9, derived(l9));
  if (!t9.contained || t9.dim_M_quotient.total() != 3 || t9.dim_M_L.total() != 1 || t9.dim_N_cap_L2 != 2)
    o.fail("L9, L^2: computed " + lemma_text(t9) + " (contained " + (t9.contained ? "true" : "false") +
           "), expected contained via 3 = 1 + 2");

  const auto& l24 = by_number(24).algebra;
  for (auto [k, lhs] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 4}, {4, 5}}) {
    const auto n = GradedIdeal(l24, Subspace::span(l24.size(), {basis_vector(l24, k)}));
    const auto t = epicenter_contains(l24, n);
    const std::size_t rhs = t.dim_M_L.total() + t.dim_N_cap_L2;
    if (t.contained || t.dim_M_quotient.total() != lhs || rhs != 7)
      o.fail("L24, <x" + std::to_string(k) + ">: computed " + lemma_text(t) + ", expected " +
             std::to_string(lhs) + " != 7");
  }
  report(4, o, "L9 L^2 contained via 3 = 1 + 2; L24 <x3> 4 != 7, <x4> 5 != 7");
}

void criterion5() {
  Outcome o;
  std::size_t expected_capable = 0, matched = 0;
  for (const auto& e : load_catalog()) {
    if (e.expected_verdict == CapabilityStatus::Capable) ++expected_capable;
    std::string got;
    try {
      const auto v = capability_verdict(e.algebra, 2);
      got = to_string(v.status);
      if (v.status == CapabilityStatus::Undetermined) o.fail(e.id + " Undetermined");
    } catch (const std::exception& ex) {
      o.fail(e.id + " not decided (" + ex.what() + ")");
      continue;
    }
    if (got != to_string(e.expected_verdict))
      o.fail(e.id + " " + got + ", expected " + to_string(e.expected_verdict));
    else
      ++matched;
  }
  if (expected_capable != 14) o.fail("catalog lists " + std::to_string(expected_capable) + " capable");
  report(5, o, std::to_string(matched) + " verdicts match, 14 capable, no Undetermined");
}

void criterion6() {
  Outcome o;
  std::mt19937 rng(20261017);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_class_two(rng, i);
    if (!validate(a).empty() || !is_nilpotent(a)) {
      o.fail(a.name() + " generator produced an invalid algebra");
      continue;
    }
    const auto t = multiplier_tags(a).dim, h = multiplier_homology(a).dim;
    if (t != h) o.fail(a.name() + ": tags " + t.str() + " vs homology " + h.str());
    for (const auto& [x, y, z] : chain::c3_basis(a))
      if (!is_zero(chain::boundary2(a, chain::boundary3(a, x, y, z)))) {
        o.fail(a.name() + ": d2 d3 != 0");
        break;
      }
  }
  report(6, o, "200 random class-two algebras, engines agree, d2 d3 = 0");
}

void criterion7() {
  Outcome o;
  std::vector<const CatalogEntry*> pool;
  for (const auto& e : load_catalog())
    if (!flagged_as_printed(e)) pool.push_back(&e);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 50; ++i) {
    const auto& a = pool[pick(rng)]->algebra;
    const auto b = change_basis(a, random_basis_change(rng, a.dim()));
    auto sig = [](const SuperAlgebra& x) {
      std::string s = center(x).dim().str();
      for (const auto& l : lower_central_series(x).terms) s += " " + l.dim().str();
      s += " M" + multiplier_tags(x).dim.str();
      s += " " + to_string(capability_verdict(x, 2).status);
      return s;
    };
    const auto sa = sig(a), sb = sig(b);
    if (sa != sb) o.fail(a.name() + ": " + sa + " vs " + sb);
  }
  report(7, o, "50 random basis changes preserve center, L^k, multiplier and verdict");
}

void criterion8() {
  Outcome o;
  const std::vector<SuperAlgebra> pieces{abelian(1, 0), abelian(0, 1), heis(1, 0), heis(0, 1), odd_heis(1)};
  int pairs = 0;
  for (const auto& h : pieces)
    for (const auto& k : pieces) {
      const auto direct = multiplier_tags(direct_sum(h, k)).dim.total();
      const auto law = multiplier_direct_sum(h, k).dim.total();
      ++pairs;
      if (direct != law)
        o.fail(h.name() + " + " + k.name() + ": tags " + std::to_string(direct) + ", law " + std::to_string(law));
    }
  const auto inst = multiplier_tags(direct_sum(odd_heis(1), abelian(1, 0))).dim.total();
  if (inst != 4) o.fail("M(H_1 + A(1|0)) = " + std::to_string(inst));
  report(8, o, std::to_string(pairs) + " ordered pairs agree, M(H_1 + A(1|0)) = 4");
}

void criterion9() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& e : load_catalog()) {
    ++n;
    const auto text = print_algebra(e.algebra);
    try {
      const auto back = parse_algebra(text, ParseMode::Lenient);
      if (!(back == e.algebra) || print_algebra(back) != text) o.fail(e.id + " round trip differs");
    } catch (const std::exception& ex) {
      o.fail(e.id + " reparse: " + ex.what());
    }
  }
  const std::vector<std::vector<std::string>> runs{{"catalog", "verify"},
                                                   {"catalog", "list"},
                                                   {"multiplier", "catalog:L27_3_2", "--method", "all"},
                                                   {"capability", "catalog:L9_2_2"},
                                                   {"invariants", "catalog:L45_2_3"}};
  for (const auto& args : runs) {
    std::ostringstream o1, e1, o2, e2;
    const int c1 = run(args, o1, e1), c2 = run(args, o2, e2);
    if (c1 != c2 || o1.str() != o2.str() || e1.str() != e2.str()) o.fail("'" + args[0] + "' output differs");
  }
  report(9, o, "parse(print) identity on " + std::to_string(n) + " entries, repeated reports byte-identical");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
