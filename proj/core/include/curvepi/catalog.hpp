#ifndef CURVEPI_CATALOG_HPP_
#define CURVEPI_CATALOG_HPP_

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "curvepi/abelian.hpp"
#include "curvepi/presentation.hpp"

namespace curvepi {

  // Edge-labelled graph for Artin and Coxeter groups. Labels are >= 2;
  // vertex pairs without an edge carry the label infinity (no relator).
  struct LabeledGraph {
    struct Edge {
      unsigned v     = 0;
      unsigned w     = 0;
      unsigned label = 2;
    };
    unsigned          vertices = 0;
    std::vector<Edge> edges;

    static LabeledGraph path(unsigned vertices, unsigned label);
    static LabeledGraph triangle(unsigned m, unsigned n, unsigned p);
  };

  struct SimpleGraph {
    unsigned                                  vertices = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
  };

  struct GroupTag;
  using TagPtr = std::shared_ptr<GroupTag const>;

  namespace tags {
    struct Free { unsigned n = 1; };
    struct Braid { unsigned n = 2; };
    struct SphereBraid3 {};
    struct Artin { LabeledGraph graph; };
    struct Coxeter { LabeledGraph graph; };
    struct Raag { SimpleGraph graph; };
    struct Toric { unsigned p = 2, q = 3; };
    struct ToricEven { unsigned r = 1; };
    // Coefficients c0, c1, ..., cd of T = c0 + c1 t + ... + cd t^d.
    struct GPoly { std::vector<long> coeffs; };
    struct GPolyMod { unsigned p = 2; std::vector<long> coeffs; };
    struct Gr { unsigned p = 2, q = 3, r = 5; };
    struct Triangle { unsigned p = 2, q = 3, r = 7; };
    struct Surface { unsigned g = 1; };
    struct SurfaceCentralExt { unsigned g = 1; long p = 0; };
    struct Cyclic { unsigned n = 2; };
    struct Abelian { InvariantFactors invariants; };
    struct DirectProduct { TagPtr left, right; };
    struct FreeProduct { TagPtr left, right; };
    struct QuinticExplicit { std::string case_id; };
  }  // namespace tags

  struct GroupTag {
    std::variant<tags::Free, tags::Braid, tags::SphereBraid3, tags::Artin, tags::Coxeter,
                 tags::Raag, tags::Toric, tags::ToricEven, tags::GPoly, tags::GPolyMod,
                 tags::Gr, tags::Triangle, tags::Surface, tags::SurfaceCentralExt,
                 tags::Cyclic, tags::Abelian, tags::DirectProduct, tags::FreeProduct,
                 tags::QuinticExplicit>
        value;
  };

  TagPtr make_tag(GroupTag tag);
  TagPtr direct_product(TagPtr a, TagPtr b);
  TagPtr free_product(TagPtr a, TagPtr b);

  // Throws Error on invalid parameters.
  Presentation build(GroupTag const& tag);

  // Triangle Artin group on a, b, x: label M on (a,b), N on (b,x), P on (a,x).
  Presentation artin_from_triple(unsigned m, unsigned n, unsigned p);

  // Case ids accepted by QuinticExplicit.
  std::vector<std::string> const& quintic_case_ids();

  // Compact text syntax: "free:3", "braid:3", "spherebraid3", "artin:333",
  // "coxeter:233", "raag:4:0-1,1-2", "toric:3,4", "toriceven:2",
  // "gpoly:-1,0,1", "gpolymod:3:1,1", "gr:2,3,5", "triangle:2,3,7",
  // "surface:3", "surfext:3,1", "cyclic:2", "abelian:2:4",
  // "prod(A;B)", "fprod(A;B)", "quintic:C4_3A2".
  GroupTag    parse_tag(std::string_view text);
  std::string format_tag(GroupTag const& tag);
  // Conventional name, e.g. "T_{3,4}", "B_3", "Art_{333}".
  std::string display_name(GroupTag const& tag);

  nlohmann::json to_json(GroupTag const& tag);
  GroupTag       tag_from_json(nlohmann::json const& j);

  // Same presentation up to a bijection of generators and, per relator,
  // rotation and inversion; relator lists compared as multisets. Brute force
  // over generator bijections, intended for up to 7 generators.
  bool equivalent_up_to_relabeling(Presentation const& p, Presentation const& q);

}  // namespace curvepi

#endif  // CURVEPI_CATALOG_HPP_
