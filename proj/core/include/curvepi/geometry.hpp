#ifndef CURVEPI_GEOMETRY_HPP_
#define CURVEPI_GEOMETRY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/error.hpp"

namespace curvepi {

  // Singularity of the union curve, in Arnol'd notation.
  struct SingularityKind {
    enum class Family { A, D, E, X };
    Family   family = Family::A;
    unsigned index  = 1;

    // "A3", "D4", "X9"; nullopt for labels outside A_k, D4-D6, E7, X9.
    static std::optional<SingularityKind> parse(std::string const& label);
    std::string label() const;
    // Number of local branches and the intersection number of branches i, j.
    std::size_t branch_count() const;
    unsigned    intersection(std::size_t i, std::size_t j) const;
    // delta of branch i by itself (cuspidal branches only).
    unsigned branch_delta(std::size_t i) const;

    friend auto operator<=>(SingularityKind const&, SingularityKind const&) = default;
  };

  struct CurveComponent {
    std::string id;
    unsigned    degree       = 1;
    unsigned    multiplicity = 1;
  };

  // A singular point of the union; branches[i] names the component carrying
  // local branch i, in the order fixed by the kind (D5: cusp, line; D6:
  // tangent, tangent, transverse; E7: cusp, tangent line).
  struct SingularPoint {
    std::string              kind;
    std::string              location;
    std::vector<std::string> branches;
  };

  struct CombinatorialType {
    std::vector<CurveComponent> components;
    std::vector<SingularPoint>  points;

    std::vector<unsigned> degrees() const;
    unsigned              total_degree() const;
  };

  // Checks: "kind", "component", "branches", "bezout", "genus", "degree",
  // "repeated".
  ValidationReport validate_combinatorial_type(CombinatorialType const& ct);

  // Sum of delta invariants of the component's own branches per point.
  std::map<std::string, unsigned> component_deltas(CombinatorialType const& ct);

  void from_json(nlohmann::json const& j, CombinatorialType& ct);
  void to_json(nlohmann::json& j, CombinatorialType const& ct);

  enum class PointKind { node, cusp, tangency, triple };

  struct PendingPoint {
    std::string                id;
    PointKind                  kind  = PointKind::node;
    unsigned                   order = 0;  // tangency order
    std::vector<std::string>   components;
    std::optional<std::string> node_of;  // component whose own node sits here
    std::optional<std::string> cusp_of;  // component whose own cusp sits here
  };

  struct LedgerComponent {
    std::string id;
    long        self_intersection = 0;
    unsigned    nodes             = 0;
    unsigned    cusps             = 0;
    bool        exceptional       = false;
  };

  struct BlowUpStep;

  class BlowUpLedger {
   public:
    BlowUpLedger() = default;
    // Components start at C.C = d^2.
    BlowUpLedger(std::vector<LedgerComponent> components, std::vector<PendingPoint> pending);

    std::vector<LedgerComponent> const& components() const noexcept {
      return components_;
    }
    std::vector<PendingPoint> const& pending() const noexcept {
      return pending_;
    }
    std::size_t exceptional_divisors() const noexcept {
      return exceptional_;
    }
    LedgerComponent const& component(std::string const& id) const;

   private:
    friend BlowUpLedger blow_up(BlowUpLedger const&, BlowUpStep const&);

    std::vector<LedgerComponent> components_;
    std::vector<PendingPoint>    pending_;
    std::size_t                  exceptional_ = 0;
  };

  // Either a pending point (multiplicities optional, checked against it) or
  // an ad-hoc smooth point given by its multiplicity map.
  struct BlowUpStep {
    std::optional<std::string>      point;
    std::map<std::string, unsigned> multiplicity;
  };

  // Each incident component loses m^2. The point then evolves: node and
  // triple point resolve, cusp becomes a tangency of order 2, tangency of
  // order k > 2 drops to k - 1, tangency of order 2 becomes a triple point
  // with the new exceptional divisor.
  BlowUpLedger blow_up(BlowUpLedger const& ledger, BlowUpStep const& step);

  struct NoriComponent {
    std::string id;
    long        self_intersection = 0;
    long        two_r             = 0;
    bool        pass              = false;
  };

  struct NoriReport {
    std::vector<NoriComponent> components;
    bool                       d_nodal_only = false;
    bool                       transverse   = false;
    bool                       pass         = false;
  };

  // C.C > 2 r(C) for every component of D. Throws Error while the worklist
  // still holds unresolved points.
  NoriReport nori_check(BlowUpLedger const& ledger, std::vector<std::string> const& d_components);

  struct BlowUpScript {
    std::string                     name;
    BlowUpLedger                    initial;
    std::vector<BlowUpStep>         steps;
    std::vector<std::string>        d_components;
    std::optional<long>             expected_self_intersection;  // of d_components[0]
    std::optional<std::string>      expected_nori;               // "pass", "fail", "unresolved"
  };

  BlowUpScript blow_up_script_from_json(nlohmann::json const& j);

  struct ScriptRun {
    BlowUpLedger              final;
    std::optional<NoriReport> nori;  // empty if the worklist is not resolved
    std::string               unresolved;
  };

  ScriptRun run_script(BlowUpScript const& script);

  nlohmann::json to_json(BlowUpLedger const& l);
  nlohmann::json to_json(NoriReport const& r);

}  // namespace curvepi

#endif  // CURVEPI_GEOMETRY_HPP_
