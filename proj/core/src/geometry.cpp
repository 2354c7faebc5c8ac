#include "curvepi/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

namespace curvepi {

  std::optional<SingularityKind> SingularityKind::parse(std::string const& label) {
    if (label.size() < 2 || std::isdigit(static_cast<unsigned char>(label[1])) == 0) {
      return std::nullopt;
    }
    std::size_t used  = 0;
    unsigned    index = 0;
    try {
      index = static_cast<unsigned>(std::stoul(label.substr(1), &used));
    } catch (std::exception const&) {
      return std::nullopt;
    }
    if (used + 1 != label.size()) {
      return std::nullopt;
    }
    switch (label[0]) {
      case 'A':
        if (index >= 1) {
          return SingularityKind{Family::A, index};
        }
        break;
      case 'D':
        if (index >= 4 && index <= 6) {
          return SingularityKind{Family::D, index};
        }
        break;
      case 'E':
        if (index == 7) {
          return SingularityKind{Family::E, index};
        }
        break;
      case 'X':
        if (index == 9) {
          return SingularityKind{Family::X, index};
        }
        break;
      default:
        break;
    }
    return std::nullopt;
  }

  std::string SingularityKind::label() const {
    static constexpr char letters[] = {'A', 'D', 'E', 'X'};
    return letters[static_cast<int>(family)] + std::to_string(index);
  }

  std::size_t SingularityKind::branch_count() const {
    switch (family) {
      case Family::A:
        return index % 2 == 1 ? 2 : 1;
      case Family::D:
        return index == 5 ? 2 : 3;
      case Family::E:
        return 2;
      case Family::X:
        return 4;
    }
    return 0;
  }

  unsigned SingularityKind::intersection(std::size_t i, std::size_t j) const {
    if (i == j) {
      return 0;
    }
    switch (family) {
      case Family::A:
        return (index + 1) / 2;
      case Family::D:
        if (index == 5) {
          return 2;
        }
        if (index == 6) {
          return std::min(i, j) == 0 && std::max(i, j) == 1 ? 2 : 1;
        }
        return 1;
      case Family::E:
        return 3;
      case Family::X:
        return 1;
    }
    return 0;
  }

  unsigned SingularityKind::branch_delta(std::size_t i) const {
    switch (family) {
      case Family::A:
        return index % 2 == 0 ? index / 2 : 0;
      case Family::D:
        return index == 5 && i == 0 ? 1 : 0;
      case Family::E:
        return i == 0 ? 1 : 0;
      case Family::X:
        return 0;
    }
    return 0;
  }

  std::vector<unsigned> CombinatorialType::degrees() const {
    std::vector<unsigned> out;
    for (auto const& c : components) {
      out.push_back(c.degree);
    }
    return out;
  }

  unsigned CombinatorialType::total_degree() const {
    unsigned d = 0;
    for (auto const& c : components) {
      d += c.degree * c.multiplicity;
    }
    return d;
  }

  std::map<std::string, unsigned> component_deltas(CombinatorialType const& ct) {
    std::map<std::string, unsigned> delta;
    for (auto const& c : ct.components) {
      delta[c.id] = 0;
    }
    for (auto const& p : ct.points) {
      auto const kind = SingularityKind::parse(p.kind);
      if (!kind || p.branches.size() != kind->branch_count()) {
        continue;
      }
      for (std::size_t i = 0; i < p.branches.size(); ++i) {
        delta[p.branches[i]] += kind->branch_delta(i);
        for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
          if (p.branches[i] == p.branches[j]) {
            delta[p.branches[i]] += kind->intersection(i, j);
          }
        }
      }
    }
    return delta;
  }

  ValidationReport validate_combinatorial_type(CombinatorialType const& ct) {
    ValidationReport      report;
    std::set<std::string> ids;
    std::map<std::string, unsigned> degree;
    if (ct.components.empty()) {
      report.fail("component", "no components");
    }
    for (auto const& c : ct.components) {
      if (!ids.insert(c.id).second) {
        report.fail("component", "duplicate component id '" + c.id + "'");
      }
      if (c.degree == 0) {
        report.fail("component", "component '" + c.id + "' has degree 0");
      }
      if (c.multiplicity != 1) {
        report.fail("repeated", "component '" + c.id + "' has multiplicity "
                                    + std::to_string(c.multiplicity) + "; reduce the curve first");
      }
      degree[c.id] = c.degree;
    }
    if (ct.total_degree() > 5) {
      report.fail("degree", "total degree " + std::to_string(ct.total_degree()) + " exceeds 5");
    }

    std::map<std::pair<std::string, std::string>, unsigned> meet;
    bool                                                    branches_ok = true;
    for (auto const& p : ct.points) {
      auto const kind = SingularityKind::parse(p.kind);
      if (!kind) {
        report.fail("kind", "unsupported singularity '" + p.kind + "' at " + p.location);
        branches_ok = false;
        continue;
      }
      if (p.branches.size() != kind->branch_count()) {
        report.fail("branches", p.kind + " at " + p.location + " needs "
                                    + std::to_string(kind->branch_count()) + " branches, got "
                                    + std::to_string(p.branches.size()));
        branches_ok = false;
        continue;
      }
      for (std::size_t i = 0; i < p.branches.size(); ++i) {
        if (!ids.contains(p.branches[i])) {
          report.fail("branches", "branch at " + p.location + " names unknown component '"
                                      + p.branches[i] + "'");
          branches_ok = false;
        }
        for (std::size_t j = i + 1; j < p.branches.size(); ++j) {
          if (p.branches[i] != p.branches[j]) {
            auto key = std::minmax(p.branches[i], p.branches[j]);
            meet[{key.first, key.second}] += kind->intersection(i, j);
          }
        }
      }
    }

    if (branches_ok) {
      for (auto it = ct.components.begin(); it != ct.components.end(); ++it) {
        for (auto jt = std::next(it); jt != ct.components.end(); ++jt) {
          auto const     key      = std::minmax(it->id, jt->id);
          unsigned const listed   = meet[{key.first, key.second}];
          unsigned const expected = it->degree * jt->degree;
          if (listed != expected) {
            report.fail("bezout", it->id + " and " + jt->id + " meet with total multiplicity "
                                      + std::to_string(listed) + ", expected "
                                      + std::to_string(expected));
          }
        }
      }
      for (auto const& [id, delta] : component_deltas(ct)) {
        unsigned const d     = degree[id];
        unsigned const bound = d >= 2 ? (d - 1) * (d - 2) / 2 : 0;
        if (delta > bound) {
          report.fail("genus", "component '" + id + "' has delta " + std::to_string(delta)
                                   + ", bound is " + std::to_string(bound));
        }
      }
    }
    return report;
  }

  void from_json(nlohmann::json const& j, CombinatorialType& ct) {
    ct = {};
    for (auto const& c : j.at("components")) {
      ct.components.push_back({c.at("id").get<std::string>(), c.at("degree").get<unsigned>(),
                               c.value("multiplicity", 1u)});
    }
    for (auto const& p : j.value("singularities", nlohmann::json::array())) {
      ct.points.push_back({p.at("kind").get<std::string>(), p.value("location", std::string()),
                           p.at("branches").get<std::vector<std::string>>()});
    }
  }

  void to_json(nlohmann::json& j, CombinatorialType const& ct) {
    nlohmann::json components = nlohmann::json::array();
    for (auto const& c : ct.components) {
      components.push_back({{"id", c.id}, {"degree", c.degree}, {"multiplicity", c.multiplicity}});
    }
    nlohmann::json points = nlohmann::json::array();
    for (auto const& p : ct.points) {
      points.push_back({{"kind", p.kind}, {"location", p.location}, {"branches", p.branches}});
    }
    j = {{"components", components}, {"singularities", points}};
  }

  BlowUpLedger::BlowUpLedger(std::vector<LedgerComponent> components, std::vector<PendingPoint> pending)
      : components_(std::move(components)), pending_(std::move(pending)) {
    std::set<std::string> ids;
    for (auto const& c : components_) {
      if (!ids.insert(c.id).second) {
        throw Error("duplicate ledger component '" + c.id + "'");
      }
    }
    std::set<std::string> points;
    for (auto const& p : pending_) {
      if (!points.insert(p.id).second) {
        throw Error("duplicate pending point '" + p.id + "'");
      }
      if (p.components.empty()) {
        throw Error("pending point '" + p.id + "' lies on no component");
      }
      for (auto const& c : p.components) {
        if (!ids.contains(c)) {
          throw Error("pending point '" + p.id + "' names unknown component '" + c + "'");
        }
      }
      if (p.kind == PointKind::tangency && p.order < 2) {
        throw Error("tangency at '" + p.id + "' needs order >= 2");
      }
    }
  }

  LedgerComponent const& BlowUpLedger::component(std::string const& id) const {
    for (auto const& c : components_) {
      if (c.id == id) {
        return c;
      }
    }
    throw Error("unknown ledger component '" + id + "'");
  }

  BlowUpLedger blow_up(BlowUpLedger const& ledger, BlowUpStep const& step) {
    BlowUpLedger out = ledger;
    std::string const e = "E" + std::to_string(ledger.exceptional_ + 1);
    auto find = [&out](std::string const& id) -> LedgerComponent& {
      for (auto& c : out.components_) {
        if (c.id == id) {
          return c;
        }
      }
      throw Error("blow-up names unknown component '" + id + "'");
    };

    if (!step.point) {
      if (step.multiplicity.empty()) {
        throw Error("blow-up at a point on no component");
      }
      for (auto const& [id, m] : step.multiplicity) {
        if (m != 1) {
          throw Error("ad-hoc blow-up points are smooth; multiplicity of '" + id + "' must be 1");
        }
        find(id).self_intersection -= 1;
      }
      out.components_.push_back({e, -1, 0, 0, true});
      ++out.exceptional_;
      return out;
    }

    auto it = std::find_if(out.pending_.begin(), out.pending_.end(),
                           [&](PendingPoint const& p) { return p.id == *step.point; });
    if (it == out.pending_.end()) {
      throw Error("no pending point '" + *step.point + "'");
    }
    PendingPoint& p = *it;
    for (auto const& [id, m] : step.multiplicity) {
      if (std::find(p.components.begin(), p.components.end(), id) == p.components.end()) {
        throw Error("component '" + id + "' does not pass through '" + p.id + "'");
      }
    }
    for (auto const& id : p.components) {
      bool const     singular = p.node_of == id || p.cusp_of == id;
      unsigned const m        = singular ? 2 : 1;
      if (auto given = step.multiplicity.find(id); given != step.multiplicity.end() && given->second != m) {
        throw Error("multiplicity of '" + id + "' at '" + p.id + "' is " + std::to_string(m)
                    + ", script says " + std::to_string(given->second));
      }
      LedgerComponent& c = find(id);
      c.self_intersection -= static_cast<long>(m * m);
      if (p.node_of == id) {
        --c.nodes;
      }
      if (p.cusp_of == id) {
        --c.cusps;
      }
    }
    out.components_.push_back({e, -1, 0, 0, true});
    ++out.exceptional_;

    p.node_of.reset();
    p.cusp_of.reset();
    bool resolved = false;
    switch (p.kind) {
      case PointKind::node:
      case PointKind::triple:
        resolved = true;
        break;
      case PointKind::cusp:
        p.kind  = PointKind::tangency;
        p.order = 2;
        p.components.push_back(e);
        break;
      case PointKind::tangency:
        if (p.order > 2) {
          --p.order;
        } else {
          p.kind  = PointKind::triple;
          p.order = 0;
        }
        p.components.push_back(e);
        break;
    }
    if (resolved) {
      out.pending_.erase(it);
    }
    return out;
  }

  NoriReport nori_check(BlowUpLedger const& ledger, std::vector<std::string> const& d_components) {
    if (!ledger.pending().empty()) {
      throw Error("ledger has " + std::to_string(ledger.pending().size())
                  + " unresolved point(s), starting with '" + ledger.pending().front().id + "'");
    }
    if (d_components.empty()) {
      throw Error("nori check needs at least one D component");
    }
    NoriReport report;
    report.d_nodal_only = true;
    report.transverse   = true;
    bool all            = true;
    for (auto const& id : d_components) {
      auto const& c = ledger.component(id);
      NoriComponent nc{id, c.self_intersection, 2L * c.nodes, false};
      nc.pass = nc.self_intersection > nc.two_r;
      all     = all && nc.pass;
      report.d_nodal_only = report.d_nodal_only && c.cusps == 0;
      report.components.push_back(nc);
    }
    report.pass = all && report.d_nodal_only && report.transverse;
    return report;
  }

  namespace {

    PointKind point_kind(std::string const& s) {
      if (s == "node") {
        return PointKind::node;
      }
      if (s == "cusp") {
        return PointKind::cusp;
      }
      if (s == "tangency") {
        return PointKind::tangency;
      }
      if (s == "triple") {
        return PointKind::triple;
      }
      throw Error("unknown point kind '" + s + "'");
    }

    std::string point_kind_name(PointKind k) {
      switch (k) {
        case PointKind::node:
          return "node";
        case PointKind::cusp:
          return "cusp";
        case PointKind::tangency:
          return "tangency";
        case PointKind::triple:
          return "triple";
      }
      return "node";
    }

  }  // namespace

  BlowUpScript blow_up_script_from_json(nlohmann::json const& j) {
    BlowUpScript script;
    script.name = j.value("name", std::string());
    std::vector<LedgerComponent> components;
    for (auto const& c : j.at("components")) {
      long const d = c.at("degree").get<long>();
      components.push_back({c.at("id").get<std::string>(), c.value("self_intersection", d * d),
                            c.value("nodes", 0u), c.value("cusps", 0u), false});
    }
    std::vector<PendingPoint> pending;
    for (auto const& p : j.value("points", nlohmann::json::array())) {
      PendingPoint point;
      point.id         = p.at("id").get<std::string>();
      point.kind       = point_kind(p.at("kind").get<std::string>());
      point.order      = p.value("order", 0u);
      point.components = p.at("components").get<std::vector<std::string>>();
      if (p.contains("node_of")) {
        point.node_of = p.at("node_of").get<std::string>();
      }
      if (p.contains("cusp_of")) {
        point.cusp_of = p.at("cusp_of").get<std::string>();
      }
      pending.push_back(std::move(point));
    }
    script.initial = BlowUpLedger(std::move(components), std::move(pending));
    for (auto const& s : j.at("steps")) {
      BlowUpStep step;
      if (s.contains("point")) {
        step.point = s.at("point").get<std::string>();
      }
      if (s.contains("multiplicity")) {
        step.multiplicity = s.at("multiplicity").get<std::map<std::string, unsigned>>();
      }
      script.steps.push_back(std::move(step));
    }
    script.d_components = j.at("d").get<std::vector<std::string>>();
    if (j.contains("expect")) {
      auto const& e = j.at("expect");
      if (e.contains("self_intersection")) {
        script.expected_self_intersection = e.at("self_intersection").get<long>();
      }
      if (e.contains("nori")) {
        script.expected_nori = e.at("nori").get<std::string>();
      }
    }
    return script;
  }

  ScriptRun run_script(BlowUpScript const& script) {
    ScriptRun run{script.initial, std::nullopt, {}};
    for (auto const& step : script.steps) {
      run.final = blow_up(run.final, step);
    }
    if (run.final.pending().empty()) {
      run.nori = nori_check(run.final, script.d_components);
    } else {
      run.unresolved = run.final.pending().front().id;
    }
    return run;
  }

  nlohmann::json to_json(BlowUpLedger const& l) {
    nlohmann::json components = nlohmann::json::array();
    for (auto const& c : l.components()) {
      components.push_back({{"id", c.id},
                            {"self_intersection", c.self_intersection},
                            {"nodes", c.nodes},
                            {"cusps", c.cusps},
                            {"exceptional", c.exceptional}});
    }
    nlohmann::json pending = nlohmann::json::array();
    for (auto const& p : l.pending()) {
      nlohmann::json j{{"id", p.id}, {"kind", point_kind_name(p.kind)}, {"components", p.components}};
      if (p.kind == PointKind::tangency) {
        j["order"] = p.order;
      }
      pending.push_back(std::move(j));
    }
    return {{"components", components},
            {"pending", pending},
            {"exceptional_divisors", l.exceptional_divisors()}};
  }

  nlohmann::json to_json(NoriReport const& r) {
    nlohmann::json components = nlohmann::json::array();
    for (auto const& c : r.components) {
      components.push_back({{"id", c.id},
                            {"self_intersection", c.self_intersection},
                            {"two_r", c.two_r},
                            {"pass", c.pass}});
    }
    return {{"components", components},
            {"d_nodal_only", r.d_nodal_only},
            {"transverse", r.transverse},
            {"pass", r.pass}};
  }

}  // namespace curvepi
