// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "curvepi/abelian.hpp"
#include "curvepi/catalog.hpp"
#include "curvepi/classify.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/fixtures.hpp"
#include "curvepi/geometry.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/verify.hpp"
#include "support/properties.hpp"

using namespace curvepi;

namespace {

  struct Outcome {
    bool        ok = false;
    std::string detail;
  };

  struct Criterion {
    int                      number;
    std::string              title;
    double                   limit;  // seconds, 0 for none
    std::function<Outcome()> check;
  };

  std::optional<std::size_t> enumerate(Presentation const& p) {
    auto const r = todd_coxeter(p, {});
    if (auto const* t = std::get_if<CosetTable>(&r)) {
      return t->size();
    }
    return std::nullopt;
  }

  std::string show(std::optional<std::size_t> n) {
    return n ? std::to_string(*n) : "overflow";
  }

  Outcome lemma(std::string const& id) {
    LemmaReport const r = run_lemma(id);
    return {r.status == Status::pass, id + " " + to_string(r.status) + ": " + r.detail};
  }

  Outcome criterion1() {
    auto const n = enumerate(parse_presentation("<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>"));
    return {n == 320u, "index " + show(n)};
  }

  Outcome criterion2() {
    Presentation const p = parse_presentation("<a,b,c | a^2=b^3=c^5=abc=1>");
    auto const         n = enumerate(p);
    InvariantFactors const ab = abelian_invariants(p);
    return {n == 60u && ab.trivial(), "order " + show(n) + ", abelianization " + to_string(ab)};
  }

  Outcome criterion3() {
    auto const s = enumerate(build(parse_tag("spherebraid3")));
    auto const c = enumerate(build(parse_tag("coxeter:233")));
    auto const t = enumerate(parse_presentation("<x,y | x^3, y^3, (xy)^2>"));
    return {s == 12u && c == 24u && t == 12u,
            "B_3(S^2) " + show(s) + ", Cox_{233} " + show(c) + ", <x,y|x^3,y^3,(xy)^2> " + show(t)};
  }

  Outcome criterion4() {
    LemmaReport const r = run_lemma("V3");
    auto const&       a = r.artifacts;
    bool const ok = r.status == Status::pass && a.value("group_order", 0) == 168
                    && a.value("kernel_abelianization", std::string()) == "Z^6";
    return {ok, r.detail};
  }

  Outcome criterion6() {
    LemmaReport const r = run_lemma("V8");
    if (r.status != Status::pass) {
      return {false, r.detail};
    }
    // Re-derive the shape of the simplified kernel from the reported presentation.
    Presentation const k = parse_presentation(r.artifacts.at("kernel").get<std::string>());
    std::set<std::pair<GenIndex, GenIndex>> edges;
    bool all_commutators = true;
    for (Word const& w : k.relators()) {
      Word const c = w.cyclic_canonical();
      bool const ok = c.size() == 4 && c[0].gen != c[1].gen && c[2] == c[0].inverse() && c[3] == c[1].inverse();
      all_commutators = all_commutators && ok;
      if (ok) {
        edges.insert({std::min(c[0].gen, c[1].gen), std::max(c[0].gen, c[1].gen)});
      }
    }
    // Complete bipartite check: 2-colour the graph, then compare edge count.
    std::size_t const     n = k.num_generators();
    std::vector<int>      colour(n, -1);
    bool                  bipartite = true;
    std::vector<GenIndex> queue{0};
    if (n > 0) {
      colour[0] = 0;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      GenIndex const v = queue[head];
      for (auto const& [x, y] : edges) {
        if (x != v && y != v) {
          continue;
        }
        GenIndex const w = x == v ? y : x;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          bipartite = false;
        }
      }
    }
    std::size_t const side = static_cast<std::size_t>(std::count(colour.begin(), colour.end(), 0));
    bool const complete_23 = bipartite && queue.size() == n && edges.size() == side * (n - side)
                             && std::min(side, n - side) == 2 && std::max(side, n - side) == 3;
    InvariantFactors const ab = abelian_invariants(k);
    bool const ok = n == 5 && k.relators().size() == 6 && all_commutators && complete_23
                    && ab == InvariantFactors(5, {});
    std::ostringstream os;
    os << n << " generators, " << k.relators().size() << " relators, "
       << (all_commutators ? "all commutators" : "non-commutator relator") << ", "
       << (complete_23 ? "K_{2,3}" : "not K_{2,3}") << ", abelianization " << to_string(ab);
    return {ok, os.str()};
  }

  Outcome criterion7() {
    struct Printed {
      char const* script;
      long        self_intersection;
      long        two_r;
    };
    // Values as printed for each blown-up curve D.
    Printed const printed[] = {
        {"example_1", 1, 0}, {"case_2_1_2", 6, 0}, {"case_2_1_3", 7, 0}, {"case_2_2_2", 7, 2},
        {"case_2_2_3", 6, 2}, {"case_2_2_4", 5, 0}, {"case_2_2_5", 4, 0}, {"case_2_3_1", 4, 0},
        {"case_2_3_2", 1, 0}, {"case_2_3_5", 3, 0}, {"case_3_2", 1, 0},   {"case_4_2", 3, 0},
        {"case_4_3", 2, 0},
    };
    std::size_t reproduced = 0;
    std::string misses;
    for (auto const& p : printed) {
      auto const text = find_fixture(std::string("blowup/") + p.script + ".json");
      if (!text) {
        misses += std::string(" missing ") + p.script;
        continue;
      }
      BlowUpScript const s   = blow_up_script_from_json(nlohmann::json::parse(*text));
      ScriptRun const    run = run_script(s);
      auto const&        d   = run.final.component(s.d_components.front());
      long const         si  = d.self_intersection;
      long const         tr  = 2L * d.nodes;
      // The inequality C.C > 2r(C) is read off the ledger; where the worklist
      // is resolved the full Nori check must agree.
      bool ok = si == p.self_intersection && tr == p.two_r && si > tr;
      if (run.nori) {
        ok = ok && run.nori->pass;
      }
      if (ok) {
        ++reproduced;
      } else {
        misses += std::string(" ") + p.script + "=" + std::to_string(si) + ">" + std::to_string(tr);
      }
    }
    return {reproduced == std::size(printed),
            std::to_string(reproduced) + "/" + std::to_string(std::size(printed)) + " reproduced" + misses};
  }

  Outcome criterion8() {
    Outcome const v11 = lemma("V11");
    std::size_t   checked = 0;
    std::string   misses;
    for (auto const& f : embedded_fixtures()) {
      std::string const name = f.name;
      if (name.rfind("types/", 0) != 0) {
        continue;
      }
      auto const j  = nlohmann::json::parse(f.json);
      auto const ct = j.get<CombinatorialType>();
      auto const r  = classify(ct);
      bool       ok = false;
      if (j.at("expect").value("not_covered", false)) {
        ok = std::holds_alternative<NotCovered>(r);
      } else if (auto const* e = std::get_if<ClassificationEntry>(&r)) {
        ok = e->display == j.at("expect").at("display").get<std::string>()
             && e->abelianization == curve_abelianization(ct.degrees())
             && (!e->presentation || abelian_invariants(*e->presentation) == e->abelianization);
      }
      ++checked;
      if (!ok) {
        misses += " " + name;
      }
    }
    return {v11.ok && misses.empty(), v11.detail + "; " + std::to_string(checked) + " type goldens" + misses};
  }

  Outcome criterion9() {
    test::PropertyResult const results[] = {
        test::snf_determinantal_divisors(0xacce01, 500),
        test::nielsen_schreier_rank(0xacce02, 6, 3, 4),
        test::coset_table_fuzz(0xacce03, 200),
        test::free_reduction_laws(0xacce04, 2000),
    };
    bool        ok = true;
    std::string detail;
    for (auto const& r : results) {
      ok = ok && r.ok();
      detail += (detail.empty() ? "" : "; ") + test::describe(r);
    }
    return {ok, detail};
  }

  Outcome criterion10() {
    auto once = [] {
      char const*        argv[] = {"curvepi", "verify", "--json"};
      std::istringstream in;
      std::ostringstream out;
      std::ostringstream err;
      int const          code = cli::run_cli(3, argv, in, out, err);
      return std::pair(code, out.str());
    };
    auto const [c1, first]  = once();
    auto const [c2, second] = once();
    bool const same = first == second && !first.empty();
    return {same && c1 == 0 && c2 == 0,
            std::string(same ? "identical" : "different") + " (" + std::to_string(first.size()) + " bytes)"};
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "order 320 quintic group enumerates to 320", 5, criterion1},
      {2, "Gr<2,3,5>/<a^2> enumerates to 60 with trivial abelianization", 1, criterion2},
      {3, "B_3(S^2), Cox_{233} and <x,y|x^3,y^3,(xy)^2> orders", 1, criterion3},
      {4, "V3 kernel of the (2,3,7) triangle group abelianizes to Z^6", 60, criterion4},
      {5, "V5 two-sided isomorphism with Art_{333}", 5, [] { return lemma("V5"); }},
      {6, "V8 index-2 kernel is the RAAG on K_{2,3}", 5, criterion6},
      {7, "blow-up self-intersections and Nori inequalities", 1, criterion7},
      {8, "classifier goldens and curve abelianization", 5, criterion8},
      {9, "property suites", 60, criterion9},
      {10, "verify --json is byte-identical across runs", 0, criterion10},
  };
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const   in_time = c.limit == 0 || elapsed < c.limit;
    bool const   pass    = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.number << ": " << c.title
              << " [" << std::fixed << std::setprecision(3) << elapsed << "s";
    if (c.limit > 0) {
      std::cout << " < " << std::setprecision(0) << c.limit << "s";
    }
    std::cout << "] " << o.detail << (in_time ? "" : " (too slow)") << "\n";
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
