#include "curvepi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "curvepi/abelian.hpp"
#include "curvepi/catalog.hpp"
#include "curvepi/classify.hpp"
#include "curvepi/fixtures.hpp"
#include "curvepi/geometry.hpp"
#include "curvepi/homomorphism.hpp"
#include "curvepi/projective_group.hpp"
#include "curvepi/schreier.hpp"
#include "curvepi/simplify.hpp"

namespace curvepi {

  std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "pass";
      case Status::fail:
        return "fail";
      case Status::inconclusive:
        return "inconclusive";
    }
    return "fail";
  }

  namespace {

    // Collects sub-check outcomes; the first failure or budget hit is kept as
    // the report detail.
    class Checker {
     public:
      explicit Checker(LemmaReport& report) : report_(report) {}

      bool require(bool ok, std::string const& witness) {
        if (!ok) {
          failures_.push_back(witness);
        }
        return ok;
      }
      void inconclusive(std::string const& hint) {
        budget_.push_back(hint);
      }
      nlohmann::json& artifacts() {
        return report_.artifacts;
      }
      void finish(std::string const& summary) {
        if (!failures_.empty()) {
          report_.status = Status::fail;
          report_.detail = join(failures_);
        } else if (!budget_.empty()) {
          report_.status = Status::inconclusive;
          report_.detail = join(budget_);
        } else {
          report_.status = Status::pass;
          report_.detail = summary;
        }
      }

     private:
      static std::string join(std::vector<std::string> const& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
          out += (i == 0 ? "" : "; ") + v[i];
        }
        return out;
      }

      LemmaReport&             report_;
      std::vector<std::string> failures_;
      std::vector<std::string> budget_;
    };

    std::optional<CosetTable> enumerate(Checker& c, std::string const& what, Presentation const& p,
                                        std::vector<Word> const& subgroup, SuiteOptions const& o) {
      EnumerationResult r = todd_coxeter(p, subgroup, o.limits);
      if (auto const* overflow = std::get_if<Overflow>(&r)) {
        c.inconclusive(what + ": coset budget " + std::to_string(overflow->limit) + " exhausted ("
                       + overflow->reason + "), raise --budget");
        return std::nullopt;
      }
      CosetTable t = std::get<CosetTable>(std::move(r));
      auto const report = validate_table(p, subgroup, t);
      c.require(report.ok(), what + ": enumerated table fails validation"
                                 + (report.ok() ? "" : " [" + report.issues.front().check + "] "
                                                           + report.issues.front().message));
      return t;
    }

    void expect_order(Checker& c, std::string const& what, Presentation const& p, std::size_t order,
                      SuiteOptions const& o) {
      if (auto t = enumerate(c, what, p, {}, o)) {
        c.artifacts()[what + "_order"] = t->size();
        c.require(t->size() == order, what + ": enumeration gives " + std::to_string(t->size())
                                          + " cosets, expected " + std::to_string(order));
      }
    }

    void expect_abelianization(Checker& c, std::string const& what, Presentation const& p,
                               InvariantFactors const& expected) {
      InvariantFactors const got = abelian_invariants(p);
      c.artifacts()[what + "_abelianization"] = to_string(got);
      c.require(got == expected,
                what + ": abelianization " + to_string(got) + ", expected " + to_string(expected));
    }

    void expect_isomorphism(Checker& c, std::string const& what, SubstitutionMap const& fwd,
                            SubstitutionMap const& bwd, SuiteOptions const& o) {
      IsomorphismCheck const iso = check_isomorphism(fwd, bwd, o.budget);
      nlohmann::json         j{{"verdict", to_string(iso.verdict)},
                               {"forward", to_json(iso.forward, fwd.target())},
                               {"backward", to_json(iso.backward, bwd.target())},
                               {"detail", iso.detail}};
      c.artifacts()[what] = j;
      if (iso.verdict == Verdict::refuted) {
        c.require(false, what + ": refuted (" + iso.detail + ")");
      } else if (iso.verdict == Verdict::inconclusive) {
        // Isomorphism claims need a two-sided proof.
        c.require(false, what + ": not verified within the derivation budget (" + iso.detail
                             + "), raise max_insertions or max_states");
      }
    }

    using Runner = std::function<void(Checker&, SuiteOptions const&)>;

    void v1(Checker& c, SuiteOptions const& o) {
      Presentation const p = build(parse_tag("quintic:C5_3A4"));
      if (auto t = enumerate(c, "C5_3A4", p, {}, o)) {
        c.artifacts()["cosets"] = t->size();
        c.artifacts()["table"]  = to_json(*t, p);
        c.require(t->size() == 320, "enumeration gives " + std::to_string(t->size()) + " cosets, expected 320");
      }
      expect_abelianization(c, "C5_3A4", p, InvariantFactors(0, {5}));
      c.finish("order 320, abelianization Z/5");
    }

    void v2(Checker& c, SuiteOptions const& o) {
      Presentation const quotient = parse_presentation("<a,b,c | a^2=b^3=c^5=abc=1>");
      Presentation const gr       = build(parse_tag("gr:2,3,5"));
      Presentation const gr_mod   = gr.with_relators({Word::generator(0, 2)});
      c.artifacts()["presentation"] = format_presentation(quotient);
      expect_order(c, "quotient", quotient, 60, o);
      expect_order(c, "gr_mod_a2", gr_mod, 60, o);
      expect_abelianization(c, "quotient", quotient, InvariantFactors());
      c.finish("order 60, perfect");
    }

    bool is_commutator(Word const& r) {
      return r.size() == 4 && r[0].gen == r[2].gen && r[1].gen == r[3].gen && r[0].gen != r[1].gen
             && r[0].sign == -r[2].sign && r[1].sign == -r[3].sign;
    }

    void v3(Checker& c, SuiteOptions const& o) {
      ProjectiveLinearGroup const psl(7);
      c.artifacts()["group_order"] = psl.order();
      c.require(psl.order() == 168, "PSL(2,7) has " + std::to_string(psl.order()) + " elements");
      auto const pair = find_237_pair(psl);
      if (!c.require(pair.has_value(), "no (2,3,7) generating pair found")) {
        c.finish("");
        return;
      }
      auto const matrix = [&](std::size_t i) {
        auto const& m = psl.element(i);
        return nlohmann::json{{m[0], m[1]}, {m[2], m[3]}};
      };
      c.artifacts()["x"] = matrix(pair->x);
      c.artifacts()["y"] = matrix(pair->y);
      if (psl.order() > o.limits.max_cosets) {
        c.inconclusive("index " + std::to_string(psl.order()) + " exceeds the coset budget "
                       + std::to_string(o.limits.max_cosets) + ", raise --budget");
        c.finish("");
        return;
      }
      Presentation const delta = build(parse_tag("triangle:2,3,7"));
      CosetTable const   table = from_permutation_action({psl.right_action(pair->x), psl.right_action(pair->y)});
      auto const         report = validate_table(delta, table.subgroup(), table);
      c.require(report.ok(), "regular action is not a coset table of the triangle group"
                                 + (report.ok() ? "" : ": " + report.issues.front().message));
      c.require(table.size() == 168, "index " + std::to_string(table.size()));
      if (!report.ok()) {
        c.finish("");
        return;
      }
      Presentation const kernel = subgroup_presentation(delta, table);
      Presentation const simple = simplify(kernel, o.budget);
      c.artifacts()["schreier_generators"]   = kernel.num_generators();
      c.artifacts()["schreier_relators"]     = kernel.relators().size();
      c.artifacts()["simplified_generators"] = simple.num_generators();
      c.artifacts()["simplified_relators"]   = simple.relators().size();
      expect_abelianization(c, "kernel", simple, InvariantFactors(6, {}));
      c.finish("index-168 kernel, abelianization Z^6");
    }

    void v4(Checker& c, SuiteOptions const& o) {
      Presentation const pi    = build(parse_tag("quintic:C5_A6_3A2"));
      Presentation const quot  = pi.with_relators({Word::generator(0, 3)});
      Presentation const delta = build(parse_tag("triangle:2,3,7"));
      auto const         phi   = SubstitutionMap::from_strings(delta, quot, {{"a", "uv^2"}, {"b", "u"}});
      auto const         psi   = SubstitutionMap::from_strings(quot, delta, {{"u", "b"}, {"v", "(ab)^-4"}});
      expect_isomorphism(c, "phi", phi, psi, o);
      expect_abelianization(c, "quotient", quot, InvariantFactors());
      c.finish("Delta(2,3,7) isomorphic to the quotient by u^3, both directions verified");
    }

    void v5(Checker& c, SuiteOptions const& o) {
      Presentation const pi  = build(parse_tag("quintic:C4_3A2"));
      Presentation const art = artin_from_triple(3, 3, 3);
      auto const fwd = SubstitutionMap::from_strings(pi, art, {{"a", "a"}, {"b", "b"}, {"c", "b^-1xb"}});
      auto const bwd = SubstitutionMap::from_strings(art, pi, {{"a", "a"}, {"b", "b"}, {"x", "bcb^-1"}});
      expect_isomorphism(c, "art333", fwd, bwd, o);
      c.finish("isomorphic to Art_{333}, both directions verified");
    }

    void v6(Checker& c, SuiteOptions const& o) {
      for (unsigned r : {2u, 3u}) {
        std::string const  name  = "T_2_" + std::to_string(2 * r);
        Presentation const toric = build(parse_tag("toriceven:" + std::to_string(r)));
        Presentation const quot  = toric.with_relators({(Word::generator(0) * Word::generator(1)).pow(r)});
        Presentation const target({"a", "c"}, {Word::generator(1, r)});
        auto const fwd = SubstitutionMap::from_strings(quot, target, {{"a", "a"}, {"b", "a^-1c"}});
        auto const bwd = SubstitutionMap::from_strings(target, quot, {{"a", "a"}, {"c", "ab"}});
        expect_isomorphism(c, name + "_quotient", fwd, bwd, o);
        expect_abelianization(c, name, toric, InvariantFactors(2, {}));
        expect_abelianization(c, name + "_quotient", quot, InvariantFactors(1, {BigInt(r)}));
      }
      c.finish("quotients isomorphic to Z * Z/r; T_{2,4}, T_{2,6} abelianize to Z^2");
    }

    void v7(Checker& c, SuiteOptions const& o) {
      Presentation const pi     = build(parse_tag("quintic:C3_C2"));
      Presentation const quot   = pi.with_relators({Word::generator(0, 3), Word::generator(1, 3)});
      Presentation const source = parse_presentation("<x,y | x^3, y^3, (xy)^2>");
      auto const         m      = SubstitutionMap::from_strings(source, quot, {{"x", "a"}, {"y", "b^-1"}});
      HomomorphismCheck const hom = check_homomorphism(m, o.budget);
      c.artifacts()["homomorphism"] = to_json(hom, quot);
      c.require(hom.verdict == Verdict::verified, "x->a, y->b^-1 is not verified as a homomorphism: " + hom.detail);
      HomomorphismCheck const onto
          = check_preimages(m, {Word::generator(0), Word::generator(1, -1)}, o.budget);
      c.artifacts()["surjectivity"] = to_json(onto, quot);
      c.require(onto.verdict == Verdict::verified, "preimages not verified: " + onto.detail);
      expect_order(c, "source", source, 12, o);
      expect_order(c, "cox233", build(parse_tag("coxeter:233")), 24, o);

      Word const chain = parse_word("ab^3a^-1b^-3", pi.generators());
      DerivationResult const d = derive_relator(pi, chain, o.budget);
      if (auto const* trace = std::get_if<ProofTrace>(&d)) {
        c.artifacts()["b3_central"] = trace_to_json(*trace, pi);
        c.require(replay_trace(pi, *trace), "trace for ab^3a^-1b^-3 does not replay");
      } else {
        c.require(false, "ab^3a^-1 = b^3 not derived: " + std::get<Inconclusive>(d).reason);
      }
      c.finish("surjection verified, |source| = 12, |Cox_{233}| = 24, b^3 central");
    }

    // Undirected commutation graph on the generators; true iff it is K_{2,3}.
    bool complete_bipartite_2_3(Presentation const& p, nlohmann::json& edges) {
      std::size_t const              n = p.num_generators();
      std::set<std::pair<GenIndex, GenIndex>> adj;
      for (Word const& r : p.relators()) {
        GenIndex const v = r[0].gen;
        GenIndex const w = r[1].gen;
        std::pair<GenIndex, GenIndex> const e{std::min(v, w), std::max(v, w)};
        adj.insert(e);
        edges.push_back({p.generators()[e.first], p.generators()[e.second]});
      }
      if (n != 5 || adj.size() != 6) {
        return false;
      }
      std::vector<std::size_t> degree(n, 0);
      for (auto const& [v, w] : adj) {
        ++degree[v];
        ++degree[w];
      }
      std::vector<GenIndex> hubs;
      for (GenIndex v = 0; v < n; ++v) {
        if (degree[v] == 3) {
          hubs.push_back(v);
        } else if (degree[v] != 2) {
          return false;
        }
      }
      if (hubs.size() != 2 || adj.contains(std::minmax(hubs[0], hubs[1]))) {
        return false;
      }
      for (GenIndex v = 0; v < n; ++v) {
        if (v != hubs[0] && v != hubs[1]
            && !(adj.contains(std::minmax(v, hubs[0])) && adj.contains(std::minmax(v, hubs[1])))) {
          return false;
        }
      }
      return true;
    }

    void v8(Checker& c, SuiteOptions const& o) {
      Presentation const pi = build(parse_tag("quintic:C2_3C1_a"));
      Presentation const rewritten
          = parse_presentation("<a,x,b | bab^-1=a, b(xax^-1)b^-1=xax^-1, bx^2b^-1=x^2>");
      auto const fwd = SubstitutionMap::from_strings(pi, rewritten, {{"a", "a"}, {"b", "b"}, {"c", "b^-1x"}});
      auto const bwd = SubstitutionMap::from_strings(rewritten, pi, {{"a", "a"}, {"x", "bc"}, {"b", "b"}});
      expect_isomorphism(c, "rewrite", fwd, bwd, o);

      // phi: a, b -> 0, x -> 1 in Z/2.
      std::vector<Word> const kernel_gens{Word::generator(0), Word::generator(2), Word::generator(1, 2),
                                          Word::generator(1) * Word::generator(0) * Word::generator(1, -1)};
      CosetTable const table  = CosetTable::from_images({{0, 1}, {1, 0}, {0, 1}}, kernel_gens);
      auto const       report = validate_table(rewritten, kernel_gens, table);
      if (!c.require(report.ok(), "index-2 table invalid"
                                      + (report.ok() ? "" : ": " + report.issues.front().message))) {
        c.finish("");
        return;
      }
      Presentation const kernel = subgroup_presentation(rewritten, table);
      Presentation const simple = simplify(kernel, o.budget);
      c.artifacts()["kernel"] = format_presentation(simple);
      c.require(simple.num_generators() == 5,
                std::to_string(simple.num_generators()) + " generators after simplification, expected 5");
      c.require(simple.relators().size() == 6,
                std::to_string(simple.relators().size()) + " relators after simplification, expected 6");
      bool const commutators
          = std::all_of(simple.relators().begin(), simple.relators().end(), is_commutator);
      for (Word const& r : simple.relators()) {
        if (!is_commutator(r)) {
          c.require(false, "relator " + format_word(r, simple.generators()) + " is not a commutator");
        }
      }
      if (commutators) {
        nlohmann::json edges = nlohmann::json::array();
        c.require(complete_bipartite_2_3(simple, edges), "commutation graph is not K_{2,3}");
        c.artifacts()["commutation_graph"] = edges;
      }
      expect_abelianization(c, "kernel", simple, InvariantFactors(5, {}));
      c.finish("kernel is the RAAG on K_{2,3}, abelianization Z^5");
    }

    void v9(Checker& c, SuiteOptions const&) {
      auto const text = find_fixture("golden/abelianization.json");
      if (!c.require(text.has_value(), "golden/abelianization.json missing")) {
        c.finish("");
        return;
      }
      nlohmann::json const golden = nlohmann::json::parse(*text);
      std::size_t          n      = 0;
      for (auto const& row : golden.at("groups")) {
        std::string const tag      = row.at("tag").get<std::string>();
        std::string const expected = row.at("abelianization").get<std::string>();
        std::string const got      = to_string(abelian_invariants(build(parse_tag(tag))));
        c.require(got == expected, tag + ": " + got + ", expected " + expected);
        ++n;
      }
      c.artifacts()["groups"] = n;
      c.finish(std::to_string(n) + " catalog abelianizations match");
    }

    void v10(Checker& c, SuiteOptions const&) {
      std::size_t    n       = 0;
      nlohmann::json results = nlohmann::json::object();
      for (auto const& f : embedded_fixtures()) {
        std::string_view const name = f.name;
        if (!name.starts_with("blowup/")) {
          continue;
        }
        ++n;
        BlowUpScript const script = blow_up_script_from_json(nlohmann::json::parse(f.json));
        ScriptRun const    run    = run_script(script);
        long const         si     = run.final.component(script.d_components.front()).self_intersection;
        std::string const  nori   = !run.nori ? "unresolved" : run.nori->pass ? "pass" : "fail";
        results[script.name]      = {{"self_intersection", si},
                                     {"nori", nori},
                                     {"exceptional_divisors", run.final.exceptional_divisors()}};
        if (script.expected_self_intersection) {
          c.require(si == *script.expected_self_intersection,
                    script.name + ": self-intersection " + std::to_string(si) + ", expected "
                        + std::to_string(*script.expected_self_intersection));
        }
        if (script.expected_nori) {
          c.require(nori == *script.expected_nori,
                    script.name + ": Nori check " + nori + ", expected " + *script.expected_nori);
        }
        c.require(run.final.exceptional_divisors() == script.steps.size(),
                  script.name + ": exceptional divisor count differs from the script length");
      }
      c.require(n > 0, "no blow-up scripts embedded");
      c.artifacts()["scripts"] = results;
      c.finish(std::to_string(n) + " blow-up scripts replayed");
    }

    void v11(Checker& c, SuiteOptions const& o) {
      // Table completeness.
      std::vector<std::string> const cases{"1.1",   "1.2",   "1.3",   "2.1.1", "2.1.2", "2.1.3", "2.2.1",
                                           "2.2.2", "2.2.3", "2.2.4", "2.2.5", "2.3.1", "2.3.2", "2.3.3",
                                           "2.3.4", "2.3.5", "3.1",   "3.2",   "3.3",   "3.4",   "3.5",
                                           "4.1",   "4.2",   "4.3",   "4.4",   "4.5"};
      std::map<std::string, std::size_t> seen;
      for (auto const& row : classification_table()) {
        for (auto const& label : row.entry.cases) {
          ++seen[label];
        }
      }
      for (auto const& label : cases) {
        c.require(seen[label] == 1, "case " + label + " has " + std::to_string(seen[label]) + " table rows");
      }
      std::vector<std::size_t> const quintic_rows{2, 7, 1, 6, 3, 4, 4};
      for (std::size_t i = 0; i < quintic_rows.size(); ++i) {
        std::string const label = "quintic " + std::to_string(i + 1);
        c.require(seen[label] == quintic_rows[i], label + " has " + std::to_string(seen[label])
                                                      + " rows, expected " + std::to_string(quintic_rows[i]));
      }

      // Every row: presentation abelianization, formula, finite orders.
      for (auto const& row : classification_table()) {
        auto const& e = row.entry;
        if (e.presentation) {
          InvariantFactors const got = abelian_invariants(*e.presentation);
          c.require(got == e.abelianization, row.label + ": presentation abelianizes to " + to_string(got)
                                                 + ", row records " + to_string(e.abelianization));
        }
        if (e.properties.finite_order && e.presentation && !e.properties.abelian) {
          expect_order(c, row.label, *e.presentation, *e.properties.finite_order, o);
        }
      }

      // Goldens.
      std::size_t n = 0;
      for (auto const& f : embedded_fixtures()) {
        std::string_view const name = f.name;
        if (!name.starts_with("types/")) {
          continue;
        }
        ++n;
        nlohmann::json const j      = nlohmann::json::parse(f.json);
        std::string const    label  = std::string(name);
        auto const           ct     = j.get<CombinatorialType>();
        auto const&          expect = j.at("expect");
        Classification const result = classify(ct);
        if (auto const* entry = std::get_if<ClassificationEntry>(&result)) {
          c.require(!expect.contains("not_covered"), label + ": classified, expected NotCovered");
          c.require(entry->display == expect.value("display", std::string()),
                    label + ": " + entry->display + ", expected " + expect.value("display", std::string()));
          if (expect.contains("cases")) {
            c.require(entry->cases == expect.at("cases").get<std::vector<std::string>>(),
                      label + ": case labels differ");
          }
          c.require(entry->abelianization == curve_abelianization(ct.degrees()),
                    label + ": abelianization differs from the curve formula");
        } else {
          c.require(expect.contains("not_covered"), label + ": NotCovered, expected a classification");
        }
      }
      c.artifacts()["rows"]    = classification_table().size();
      c.artifacts()["goldens"] = n;
      c.finish(std::to_string(classification_table().size()) + " table rows, " + std::to_string(n)
               + " goldens");
    }

    void v12(Checker& c, SuiteOptions const& o) {
      Presentation const p = build(parse_tag("spherebraid3"));
      expect_order(c, "spherebraid3", p, 12, o);
      c.finish("order 12");
    }

    struct Lemma {
      char const* id;
      char const* title;
      Runner      run;
    };

    std::vector<Lemma> const& lemmas() {
      static std::vector<Lemma> const all{
          {"V1", "Order 320 quintic group", v1},
          {"V2", "Gr<2,3,5> modulo a^2 is A_5", v2},
          {"V3", "PSL(2,7) kernel of the (2,3,7) triangle group", v3},
          {"V4", "Central quotient of the C5(A6+3A2) group", v4},
          {"V5", "C4(3A2) group is Art_{333}", v5},
          {"V6", "Toric link quotients T_{2,2r}", v6},
          {"V7", "C3+C2 quotient and Cox_{233}", v7},
          {"V8", "RAAG kernel of the C2+3C1 group", v8},
          {"V9", "Abelianization golden table", v9},
          {"V10", "Blow-up arithmetic and Nori inequalities", v10},
          {"V11", "Classifier goldens", v11},
          {"V12", "Sphere braid group order", v12},
      };
      return all;
    }

  }  // namespace

  std::vector<std::string> const& lemma_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& l : lemmas()) {
        out.emplace_back(l.id);
      }
      return out;
    }();
    return ids;
  }

  LemmaReport run_lemma(std::string const& id, SuiteOptions const& options) {
    for (auto const& l : lemmas()) {
      if (id == l.id) {
        LemmaReport report;
        report.id    = l.id;
        report.title = l.title;
        Checker    checker(report);
        auto const start = std::chrono::steady_clock::now();
        try {
          l.run(checker, options);
        } catch (std::exception const& e) {
          checker.require(false, std::string("exception: ") + e.what());
          checker.finish("");
        }
        report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
      }
    }
    throw Error("unknown lemma id '" + id + "'");
  }

  std::vector<LemmaReport> run_suite(SuiteOptions const& options) {
    options.limits.validate();
    options.budget.validate();
    std::vector<std::string> ids = options.only.empty() ? lemma_ids() : options.only;
    for (auto const& id : ids) {
      if (std::find(lemma_ids().begin(), lemma_ids().end(), id) == lemma_ids().end()) {
        throw Error("unknown lemma id '" + id + "'");
      }
    }
    std::vector<LemmaReport> reports;
    for (auto const& id : ids) {
      reports.push_back(run_lemma(id, options));
    }
    return reports;
  }

  bool all_passed(std::vector<LemmaReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(), [](auto const& r) { return r.status == Status::pass; });
  }

  nlohmann::json to_json(std::vector<LemmaReport> const& reports, bool timings) {
    nlohmann::json list = nlohmann::json::array();
    for (auto const& r : reports) {
      nlohmann::json j{{"id", r.id},
                       {"title", r.title},
                       {"status", to_string(r.status)},
                       {"detail", r.detail},
                       {"artifacts", r.artifacts}};
      if (timings) {
        j["elapsed"] = r.elapsed;
      }
      list.push_back(std::move(j));
    }
    return {{"reports", list}, {"passed", all_passed(reports)}};
  }

  std::string format_reports(std::vector<LemmaReport> const& reports, bool timings) {
    std::ostringstream out;
    for (auto const& r : reports) {
      std::string status = to_string(r.status);
      std::transform(status.begin(), status.end(), status.begin(), ::toupper);
      out << r.id << std::string(5 - std::min<std::size_t>(4, r.id.size()), ' ') << status
          << std::string(14 - status.size(), ' ') << r.title << ": " << r.detail;
      if (timings) {
        out << " (" << r.elapsed << " s)";
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace curvepi
