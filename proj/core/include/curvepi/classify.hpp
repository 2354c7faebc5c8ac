#ifndef CURVEPI_CLASSIFY_HPP_
#define CURVEPI_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/abelian.hpp"
#include "curvepi/catalog.hpp"
#include "curvepi/geometry.hpp"
#include "curvepi/presentation.hpp"

namespace curvepi {

  // "1+1+1+1;6×A1": sorted component degrees, then the singularity multiset.
  using CanonicalKey = std::string;

  CanonicalKey canonical_key(CombinatorialType const& ct);

  // "C4⊔C1", "C2⊔3C1", "2C2⊔C1": components grouped by degree, highest first.
  std::string component_type(std::vector<unsigned> degrees);

  struct GroupProperties {
    bool                    abelian          = false;
    bool                    virtually_abelian = false;
    std::optional<unsigned> finite_order;
    bool                    linear_asserted             = false;
    bool                    virtually_polyfree_asserted = false;
  };

  struct ClassificationEntry {
    std::string                 display;
    std::optional<GroupTag>     tag;
    std::optional<Presentation> presentation;  // absent for data-only rows
    InvariantFactors            abelianization;
    GroupProperties             properties;
    std::vector<std::string>    cases;  // "1.3", "quintic 2"
    std::string                 note;
    bool                        partially_keyed = false;
  };

  struct NotCovered {
    CanonicalKey             key;
    std::string              reason;
    std::vector<std::string> candidates;  // labels of partially keyed rows
  };

  using Classification = std::variant<ClassificationEntry, NotCovered>;

  // Throws Error when the type fails validation (repeated or non-reduced
  // components, degree above 5, genus or intersection violations).
  Classification classify(CombinatorialType const& ct);

  struct TableRow {
    std::string                 label;  // case label or quintic row label
    std::optional<CanonicalKey> key;    // nullopt for partially keyed rows
    std::string                 components;
    ClassificationEntry         entry;
  };

  // Every keyed case and every quintic list row, in document order.
  std::vector<TableRow> const& classification_table();
  TableRow const*              find_row(std::string const& label);

  // "F_3 (case 1.3)"
  std::string summary(ClassificationEntry const& e);

  nlohmann::json to_json(ClassificationEntry const& e);
  nlohmann::json to_json(NotCovered const& n);

}  // namespace curvepi

#endif  // CURVEPI_CLASSIFY_HPP_
