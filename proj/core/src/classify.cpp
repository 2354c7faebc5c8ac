#include "curvepi/classify.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace curvepi {

  CanonicalKey canonical_key(CombinatorialType const& ct) {
    std::vector<unsigned> degrees = ct.degrees();
    std::sort(degrees.begin(), degrees.end());
    std::string key;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
      key += (i == 0 ? "" : "+") + std::to_string(degrees[i]);
    }
    key += ";";
    std::map<SingularityKind, unsigned> counts;
    for (auto const& p : ct.points) {
      auto kind = SingularityKind::parse(p.kind);
      if (!kind) {
        throw Error("unknown singularity kind '" + p.kind + "'");
      }
      ++counts[*kind];
    }
    bool first = true;
    for (auto const& [kind, n] : counts) {
      key += (first ? "" : ",") + (n > 1 ? std::to_string(n) + "×" : std::string()) + kind.label();
      first = false;
    }
    return key;
  }

  std::string component_type(std::vector<unsigned> degrees) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    std::string out;
    for (std::size_t i = 0; i < degrees.size();) {
      std::size_t j = i;
      while (j < degrees.size() && degrees[j] == degrees[i]) {
        ++j;
      }
      out += (i == 0 ? "" : "⊔") + (j - i > 1 ? std::to_string(j - i) : std::string()) + "C"
             + std::to_string(degrees[i]);
      i = j;
    }
    return out;
  }

  namespace {

    GroupProperties asserted(GroupProperties p) {
      p.linear_asserted             = true;
      p.virtually_polyfree_asserted = true;
      return p;
    }

    ClassificationEntry abelian_entry(std::vector<unsigned> const& degrees, std::vector<std::string> cases,
                                      std::string note) {
      InvariantFactors const inv = curve_abelianization(degrees);
      GroupTag               tag{tags::Abelian{inv}};
      ClassificationEntry    e;
      e.display        = to_string(inv);
      e.presentation   = build(tag);
      e.tag            = std::move(tag);
      e.abelianization = inv;
      GroupProperties p;
      p.abelian           = true;
      p.virtually_abelian = true;
      if (inv.order() != 0) {
        p.finite_order = inv.order().convert_to<unsigned>();
      }
      e.properties = asserted(p);
      e.cases      = std::move(cases);
      e.note       = std::move(note);
      return e;
    }

    ClassificationEntry tagged_entry(std::string const& tag_text, std::vector<unsigned> const& degrees,
                                     std::vector<std::string> cases, std::string note = {},
                                     GroupProperties props = {}) {
      GroupTag            tag = parse_tag(tag_text);
      ClassificationEntry e;
      e.display        = display_name(tag);
      e.presentation   = build(tag);
      e.tag            = std::move(tag);
      e.abelianization = curve_abelianization(degrees);
      e.properties     = asserted(props);
      e.cases          = std::move(cases);
      e.note           = std::move(note);
      return e;
    }

    ClassificationEntry data_entry(std::string display, std::vector<unsigned> const& degrees,
                                   std::vector<std::string> cases, std::string note, GroupProperties props) {
      ClassificationEntry e;
      e.display        = std::move(display);
      e.abelianization = curve_abelianization(degrees);
      e.properties     = asserted(props);
      e.cases          = std::move(cases);
      e.note           = std::move(note);
      return e;
    }

    GroupProperties virtually_abelian() {
      GroupProperties p;
      p.virtually_abelian = true;
      return p;
    }

    GroupProperties finite(unsigned order) {
      GroupProperties p;
      p.virtually_abelian = true;
      p.finite_order      = order;
      return p;
    }

    TableRow keyed(std::string label, CanonicalKey key, ClassificationEntry e) {
      std::string components = key.substr(0, key.find(';'));
      std::vector<unsigned> degrees;
      for (std::size_t pos = 0; pos < components.size();) {
        std::size_t plus = components.find('+', pos);
        degrees.push_back(static_cast<unsigned>(std::stoul(components.substr(pos, plus - pos))));
        pos = plus == std::string::npos ? components.size() : plus + 1;
      }
      return {std::move(label), std::move(key), component_type(degrees), std::move(e)};
    }

    TableRow quintic(std::string label, std::string components, ClassificationEntry e) {
      e.partially_keyed = true;
      return {std::move(label), std::nullopt, std::move(components), std::move(e)};
    }

    std::vector<TableRow> make_table() {
      std::vector<unsigned> const L4{1, 1, 1, 1};
      std::vector<unsigned> const CL{3, 1};
      std::vector<unsigned> const QQ{2, 2};
      std::vector<unsigned> const QLL{2, 1, 1};
      std::string const           nori = "abelian by the Nori criterion after blow-ups";
      std::string const           vab  = "kernel onto the complement of the other components is abelian";

      std::vector<TableRow> t;
      t.push_back(keyed("1.1", "1+1+1+1;6×A1", abelian_entry(L4, {"1.1"}, "nodal curve")));
      t.push_back(keyed("1.2", "1+1+1+1;3×A1,D4",
                        tagged_entry("prod(free:2;free:1)", L4, {"1.2"}, "trivial fibration from the triple point")));
      {
        ClassificationEntry e = tagged_entry("free:3", L4, {"1.3"}, "one singular fiber");
        e.presentation        = parse_presentation("<g1,g2,g3,g4 | g4g3g2g1>");
        t.push_back(keyed("1.3", "1+1+1+1;X9", std::move(e)));
      }
      t.push_back(keyed("2.1.1", "1+3;3×A1", abelian_entry(CL, {"2.1.1"}, "nodal curve")));
      t.push_back(keyed("2.1.2", "1+3;A5", abelian_entry(CL, {"2.1.2"}, nori)));
      t.push_back(keyed("2.1.3", "1+3;A1,A3", abelian_entry(CL, {"2.1.3"}, nori)));
      t.push_back(keyed("2.2.1", "1+3;4×A1", abelian_entry(CL, {"2.2.1"}, "nodal curve")));
      t.push_back(keyed("2.2.2", "1+3;2×A1,A3", abelian_entry(CL, {"2.2.2"}, nori)));
      t.push_back(keyed("2.2.3", "1+3;A1,A5", abelian_entry(CL, {"2.2.3"}, nori)));
      t.push_back(keyed("2.2.4", "1+3;A1,D4", abelian_entry(CL, {"2.2.4"}, nori)));
      t.push_back(keyed("2.2.5", "1+3;D6", abelian_entry(CL, {"2.2.5"}, nori)));
      t.push_back(keyed("2.3.1", "1+3;3×A1,A2", abelian_entry(CL, {"2.3.1"}, nori)));
      t.push_back(keyed("2.3.2", "1+3;A1,A2,A3",
                        abelian_entry(CL, {"2.3.2", "2.3.4"}, nori + "; both cases share this type")));
      t.push_back(keyed("2.3.3", "1+3;A2,A5",
                        tagged_entry("braid:3", CL, {"2.3.3"}, "complement of an affine cuspidal cubic")));
      t.push_back(keyed("2.3.5", "1+3;E7", abelian_entry(CL, {"2.3.5"}, nori)));
      t.push_back(keyed("3.1", "2+2;A7", tagged_entry("fprod(free:1;cyclic:2)", QQ, {"3.1"})));
      t.push_back(keyed("3.2", "2+2;A1,A5", data_entry("virtually abelian", QQ, {"3.2"}, vab, virtually_abelian())));
      t.push_back(
          keyed("3.3", "2+2;2×A1,A3", data_entry("virtually abelian", QQ, {"3.3"}, vab, virtually_abelian())));
      t.push_back(keyed("3.4", "2+2;2×A3", tagged_entry("fprod(free:1;cyclic:2)", QQ, {"3.4"}, "conics in a pencil")));
      t.push_back(keyed("3.5", "2+2;4×A1", abelian_entry(QQ, {"3.5"}, "nodal curve")));
      t.push_back(keyed("4.1", "1+1+2;5×A1", abelian_entry(QLL, {"4.1"}, "nodal curve")));
      t.push_back(
          keyed("4.2", "1+1+2;2×A1,D4", data_entry("virtually abelian", QLL, {"4.2"}, vab, virtually_abelian())));
      t.push_back(
          keyed("4.3", "1+1+2;3×A1,A3", data_entry("virtually abelian", QLL, {"4.3"}, vab, virtually_abelian())));
      t.push_back(
          keyed("4.4", "1+1+2;A1,D6", data_entry("virtually abelian", QLL, {"4.4"}, vab, virtually_abelian())));
      t.push_back(keyed("4.5", "1+1+2;A1,2×A3",
                        data_entry("F_2 x| Z", QLL, {"4.5"}, "fibration from the intersection of the lines", {})));
      t.push_back(keyed("quartic 3A2", "4;3×A2",
                        tagged_entry("spherebraid3", {4}, {"3-cuspidal quartic"}, {}, finite(12))));

      std::vector<unsigned> const C5{5};
      std::vector<unsigned> const C41{4, 1};
      std::vector<unsigned> const C32{3, 2};
      std::vector<unsigned> const C311{3, 1, 1};
      std::vector<unsigned> const C221{2, 2, 1};
      std::vector<unsigned> const C2111{2, 1, 1, 1};
      std::vector<unsigned> const C11111{1, 1, 1, 1, 1};

      t.push_back(keyed("quintic 1/C5_3A4", "5;3×A4",
                        tagged_entry("quintic:C5_3A4", C5, {"quintic 1"}, "type C5(3A4)", finite(320))));
      t.push_back(keyed("quintic 1/C5_A6_3A2", "5;3×A2,A6",
                        tagged_entry("quintic:C5_A6_3A2", C5, {"quintic 1"},
                                     "type C5(A6+3A2); virtually a central extension of a genus 3 surface group")));
      t.push_back(keyed("quintic 2/C4_3A2", "1+4;3×A2,2×A3",
                        tagged_entry("quintic:C4_3A2", C41, {"quintic 2"}, "type C4(3A2)+{x2,x2}; isomorphic to Art_{333}")));
      t.push_back(quintic("quintic 2/B_3", "C4⊔C1", tagged_entry("braid:3", C41, {"quintic 2"})));
      t.push_back(quintic("quintic 2/B_4", "C4⊔C1", tagged_entry("braid:4", C41, {"quintic 2"})));
      t.push_back(quintic("quintic 2/G_3(t+1)", "C4⊔C1",
                          tagged_entry("gpolymod:3:1,1", C41, {"quintic 2"}, "finite-by-Z")));
      t.push_back(quintic("quintic 2/G_5(t+1)", "C4⊔C1",
                          tagged_entry("gpolymod:5:1,1", C41, {"quintic 2"}, "finite-by-Z")));
      t.push_back(quintic("quintic 2/Gr<2,3,5> x Z", "C4⊔C1", tagged_entry("prod(gr:2,3,5;free:1)", C41, {"quintic 2"})));
      t.push_back(quintic("quintic 2/T_{3,4}", "C4⊔C1", tagged_entry("toric:3,4", C41, {"quintic 2"})));
      t.push_back(quintic("quintic 3/C3_C2", "C3⊔C2",
                          tagged_entry("quintic:C3_C2", C32, {"quintic 3"}, "virtually Z^2")));
      t.push_back(quintic("quintic 4/Z x B_3", "C3⊔2C1", tagged_entry("prod(free:1;braid:3)", C311, {"quintic 4"})));
      t.push_back(quintic("quintic 4/G(t^2-1)", "C3⊔2C1", tagged_entry("gpoly:-1,0,1", C311, {"quintic 4"})));
      t.push_back(quintic("quintic 4/G(t^3-1)", "C3⊔2C1", tagged_entry("gpoly:-1,0,0,1", C311, {"quintic 4"})));
      t.push_back(quintic("quintic 4/T_{2,4}", "C3⊔2C1", tagged_entry("toriceven:2", C311, {"quintic 4"})));
      t.push_back(quintic("quintic 4/T_{2,6}", "C3⊔2C1", tagged_entry("toriceven:3", C311, {"quintic 4"})));
      t.push_back(keyed("quintic 4/C3_A2_x3_x2x1", "1+1+3;2×A1,A2,A3,A5",
                        tagged_entry("quintic:C3_A2_x3_x2x1", C311, {"quintic 4"},
                                     "type C3(A2)+{x3}+{x2,x1}; isomorphic to Art_{234}")));
      t.push_back(quintic("quintic 5/F_2", "2C2⊔C1", tagged_entry("free:2", C221, {"quintic 5"})));
      t.push_back(quintic("quintic 5/T_{2,4}", "2C2⊔C1", tagged_entry("toriceven:2", C221, {"quintic 5"})));
      t.push_back(quintic("quintic 5/Z x B_3", "2C2⊔C1", tagged_entry("prod(free:1;braid:3)", C221, {"quintic 5"})));
      t.push_back(quintic("quintic 6/Z x F_2", "C2⊔3C1", tagged_entry("prod(free:1;free:2)", C2111, {"quintic 6"})));
      t.push_back(
          quintic("quintic 6/Z x T_{2,4}", "C2⊔3C1", tagged_entry("prod(free:1;toriceven:2)", C2111, {"quintic 6"})));
      t.push_back(quintic("quintic 6/C2_3C1_a", "C2⊔3C1",
                          tagged_entry("quintic:C2_3C1_a", C2111, {"quintic 6"}, "virtually a RAAG")));
      t.push_back(quintic("quintic 6/C2_3C1_b", "C2⊔3C1",
                          tagged_entry("quintic:C2_3C1_b", C2111, {"quintic 6"}, "isomorphic to Art_{244}")));
      t.push_back(quintic("quintic 7/F_4", "5C1", tagged_entry("free:4", C11111, {"quintic 7"})));
      t.push_back(quintic("quintic 7/Z x F_3", "5C1", tagged_entry("prod(free:1;free:3)", C11111, {"quintic 7"})));
      t.push_back(quintic("quintic 7/F_2 x F_2", "5C1", tagged_entry("prod(free:2;free:2)", C11111, {"quintic 7"})));
      t.push_back(quintic("quintic 7/Z x Z x F_2", "5C1",
                          tagged_entry("prod(abelian:2;free:2)", C11111, {"quintic 7"})));
      return t;
    }

    bool nodal(CombinatorialType const& ct) {
      return std::all_of(ct.points.begin(), ct.points.end(), [](auto const& p) { return p.kind == "A1"; });
    }

  }  // namespace

  std::vector<TableRow> const& classification_table() {
    static std::vector<TableRow> const table = make_table();
    return table;
  }

  TableRow const* find_row(std::string const& label) {
    for (auto const& row : classification_table()) {
      if (row.label == label) {
        return &row;
      }
    }
    return nullptr;
  }

  Classification classify(CombinatorialType const& ct) {
    ValidationReport const report = validate_combinatorial_type(ct);
    if (!report.ok()) {
      std::string msg = "invalid combinatorial type:";
      for (auto const& i : report.issues) {
        msg += " [" + i.check + "] " + i.message + ";";
      }
      throw Error(msg);
    }
    CanonicalKey const          key     = canonical_key(ct);
    std::vector<unsigned> const degrees = ct.degrees();
    unsigned const              total   = ct.total_degree();

    for (auto const& row : classification_table()) {
      if (row.key == key) {
        return row.entry;
      }
    }
    if (total <= 3) {
      if (key == "1+1+1;D4") {
        return tagged_entry("free:2", degrees, {"degree <= 3"}, "three concurrent lines");
      }
      return abelian_entry(degrees, {"degree <= 3"}, "curves of degree at most 3 away from three concurrent lines");
    }
    if (degrees.size() == 1) {
      return abelian_entry(degrees, {total == 4 ? "irreducible quartic" : "irreducible quintic"},
                           total == 4 ? "irreducible quartic other than the 3-cuspidal one"
                                      : "abelian by the quintic classification");
    }
    if (nodal(ct)) {
      return abelian_entry(degrees, {"nodal curve"}, "nodal curve");
    }
    NotCovered nc{key, {}, {}};
    if (total == 5) {
      std::string const type = component_type(degrees);
      for (auto const& row : classification_table()) {
        if (!row.key && row.components == type) {
          nc.candidates.push_back(row.label);
        }
      }
      nc.reason = nc.candidates.empty()
                      ? "type " + type + " is abelian unless listed, but this key is not in the table"
                      : "type " + type + " has groups known only by component type; the exact row is not determined";
    } else {
      nc.reason = "no case matches this combinatorial type";
    }
    return nc;
  }

  std::string summary(ClassificationEntry const& e) {
    std::string cases;
    for (std::size_t i = 0; i < e.cases.size(); ++i) {
      std::string const& c = e.cases[i];
      bool const numeric   = !c.empty() && std::isdigit(static_cast<unsigned char>(c[0])) != 0;
      cases += (i == 0 ? "" : ", ") + (numeric ? "case " + c : c);
    }
    return e.display + " (" + cases + ")";
  }

  nlohmann::json to_json(ClassificationEntry const& e) {
    nlohmann::json j;
    j["status"]         = "classified";
    j["display"]        = e.display;
    j["cases"]          = e.cases;
    j["abelianization"] = to_json(e.abelianization);
    j["tag"]            = e.tag ? to_json(*e.tag) : nlohmann::json();
    if (e.presentation) {
      to_json(j["presentation"], *e.presentation);
    } else {
      j["presentation"] = nullptr;
    }
    nlohmann::json props;
    props["abelian"]                     = e.properties.abelian;
    props["virtually_abelian"]           = e.properties.virtually_abelian;
    props["finite_order"]                = e.properties.finite_order ? nlohmann::json(*e.properties.finite_order)
                                                                     : nlohmann::json();
    props["linear_asserted"]             = e.properties.linear_asserted;
    props["virtually_polyfree_asserted"] = e.properties.virtually_polyfree_asserted;
    j["properties"]                      = props;
    j["note"]                            = e.note;
    j["partially_keyed"]                 = e.partially_keyed;
    return j;
  }

  nlohmann::json to_json(NotCovered const& n) {
    return {{"status", "not_covered"}, {"key", n.key}, {"reason", n.reason}, {"candidates", n.candidates}};
  }

}  // namespace curvepi
