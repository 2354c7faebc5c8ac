#include "curvepi/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"

namespace curvepi {

  LabeledGraph LabeledGraph::path(unsigned vertices, unsigned label) {
    LabeledGraph g{vertices, {}};
    for (unsigned v = 0; v + 1 < vertices; ++v) {
      g.edges.push_back({v, v + 1, label});
    }
    return g;
  }

  LabeledGraph LabeledGraph::triangle(unsigned m, unsigned n, unsigned p) {
    return {3, {{0, 1, m}, {1, 2, n}, {0, 2, p}}};
  }

  TagPtr make_tag(GroupTag tag) {
    return std::make_shared<GroupTag const>(std::move(tag));
  }

  TagPtr direct_product(TagPtr a, TagPtr b) {
    return make_tag({tags::DirectProduct{std::move(a), std::move(b)}});
  }

  TagPtr free_product(TagPtr a, TagPtr b) {
    return make_tag({tags::FreeProduct{std::move(a), std::move(b)}});
  }

  namespace {

    template <class... Ts>
    struct Overloaded : Ts... {
      using Ts::operator()...;
    };
    template <class... Ts>
    Overloaded(Ts...) -> Overloaded<Ts...>;

    std::vector<std::string> letter_names(unsigned n) {
      std::vector<std::string> out;
      for (unsigned i = 0; i < n; ++i) {
        out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "g" + std::to_string(i + 1));
      }
      return out;
    }

    Word g(GenIndex i, long e = 1) {
      return Word::generator(i, e);
    }

    void require(bool ok, std::string const& what) {
      if (!ok) {
        throw Error(what);
      }
    }

    // {a,b}^m = {b,a}^m as a relator.
    Word artin_relator(GenIndex a, GenIndex b, unsigned m) {
      return alternating(g(a), g(b), m) * alternating(g(b), g(a), m).inverse();
    }

    void check_graph(LabeledGraph const& graph) {
      std::set<std::pair<unsigned, unsigned>> seen;
      for (auto const& e : graph.edges) {
        require(e.v < graph.vertices && e.w < graph.vertices, "edge endpoint out of range");
        require(e.v != e.w, "graph has a loop");
        require(e.label >= 2, "edge labels must be at least 2");
        require(seen.insert(std::minmax(e.v, e.w)).second, "graph has a repeated edge");
      }
    }

    Presentation artin(LabeledGraph const& graph, bool coxeter) {
      check_graph(graph);
      require(graph.vertices >= 1, "graph needs a vertex");
      std::vector<Word> relators;
      if (coxeter) {
        for (unsigned v = 0; v < graph.vertices; ++v) {
          relators.push_back(g(v, 2));
        }
      }
      for (auto const& e : graph.edges) {
        relators.push_back(artin_relator(e.v, e.w, e.label));
      }
      return Presentation(letter_names(graph.vertices), std::move(relators));
    }

    Presentation gpoly(std::vector<long> const& coeffs, unsigned modulus) {
      require(coeffs.size() >= 2, "polynomial must have degree at least 1");
      require(coeffs.back() == 1, "polynomial must be monic");
      long const c0 = coeffs.front();
      if (modulus == 0) {
        require(c0 == 1 || c0 == -1, "constant term must be a unit");
      } else {
        require(modulus >= 2, "modulus must be at least 2");
        require(std::gcd(static_cast<unsigned long>(std::abs(c0)), modulus) == 1,
                "constant term must be a unit modulo p");
      }
      auto const               d = static_cast<unsigned>(coeffs.size() - 1);
      std::vector<std::string> names;
      for (unsigned i = 0; i < d; ++i) {
        names.push_back(d == 1 ? "a" : "a" + std::to_string(i));
      }
      names.emplace_back("t");
      GenIndex const    t = d;
      std::vector<Word> relators;
      for (GenIndex i = 0; i < d; ++i) {
        if (modulus != 0) {
          relators.push_back(g(i, modulus));
        }
        for (GenIndex j = i + 1; j < d; ++j) {
          relators.push_back(commutator(g(i), g(j)));
        }
      }
      // Multiplication by t on Z[t]/T: a_i -> a_{i+1}, a_{d-1} -> -sum c_i a_i.
      for (GenIndex i = 0; i + 1 < d; ++i) {
        relators.push_back(g(t) * g(i) * g(t, -1) * g(i + 1, -1));
      }
      Word image;
      for (GenIndex i = 0; i < d; ++i) {
        if (coeffs[i] != 0) {
          image *= g(i, -coeffs[i]);
        }
      }
      relators.push_back(g(t) * g(d - 1) * g(t, -1) * image.inverse());
      return Presentation(std::move(names), std::move(relators));
    }

    std::string unique_name(std::string name, std::set<std::string> const& taken) {
      while (taken.contains(name)) {
        name += "'";
      }
      return name;
    }

    Presentation combine(Presentation const& a, Presentation const& b, bool commute) {
      std::vector<std::string> names = a.generators();
      std::set<std::string>    taken(names.begin(), names.end());
      for (auto const& n : b.generators()) {
        names.push_back(unique_name(n, taken));
        taken.insert(names.back());
      }
      auto const        shift = static_cast<GenIndex>(a.num_generators());
      std::vector<Word> relators = a.relators();
      for (Word const& r : b.relators()) {
        std::vector<Letter> letters;
        for (Letter x : r) {
          letters.push_back({x.gen + shift, x.sign});
        }
        relators.emplace_back(letters);
      }
      if (commute) {
        for (GenIndex i = 0; i < a.num_generators(); ++i) {
          for (GenIndex j = 0; j < b.num_generators(); ++j) {
            relators.push_back(commutator(g(i), g(shift + j)));
          }
        }
      }
      return Presentation(std::move(names), std::move(relators));
    }

    struct QuinticCase {
      char const* id;
      char const* text;
    };

    constexpr QuinticCase kQuintics[] = {
        {"C5_3A4", "<a,b | b=ab^4a, a^2=b^2a^3b^2>"},
        {"C5_A6_3A2", "<u,v | u^3=v^7=(uv^2)^2>"},
        {"C4_3A2", "<a,b,c | aba=bab, bcb=cbc, abcb^-1a=bcb^-1abcb^-1>"},
        {"C3_C2", "<a,b | [a^3,b]=1, ab^2=ba^2>"},
        {"C3_A2_x3_x2x1", "<a,b,c | aca=cac, [b,c]=1, (ab)^2=(ba)^2>"},
        {"C2_3C1_a", "<a,b,c | [a,b]=[a,c^-1bc]=1, (bc)^2=(cb)^2>"},
        {"C2_3C1_b", "<a,b,c | (ac)^2=(ca)^2, (ab)^2=(ba)^2, [b,c]=1>"},
    };

  }  // namespace

  std::vector<std::string> const& quintic_case_ids() {
    static std::vector<std::string> const ids = [] {
      std::vector<std::string> out;
      for (auto const& c : kQuintics) {
        out.emplace_back(c.id);
      }
      return out;
    }();
    return ids;
  }

  Presentation artin_from_triple(unsigned m, unsigned n, unsigned p) {
    require(m >= 2 && n >= 2 && p >= 2, "Artin labels must be at least 2");
    return Presentation({"a", "b", "x"},
                        {artin_relator(0, 1, m), artin_relator(1, 2, n), artin_relator(0, 2, p)});
  }

  Presentation build(GroupTag const& tag) {
    return std::visit(
        Overloaded{
            [](tags::Free const& t) {
              require(t.n >= 1, "free rank must be at least 1");
              return Presentation(letter_names(t.n), {});
            },
            [](tags::Braid const& t) {
              require(t.n >= 1, "braid index must be at least 1");
              unsigned const k = t.n - 1;
              LabeledGraph   graph{k, {}};
              for (unsigned v = 0; v < k; ++v) {
                for (unsigned w = v + 1; w < k; ++w) {
                  graph.edges.push_back({v, w, w == v + 1 ? 3u : 2u});
                }
              }
              return k == 0 ? Presentation() : artin(graph, false);
            },
            [](tags::SphereBraid3 const&) {
              return parse_presentation("<s1,s2 | s1s2s1=s2s1s2, s1s2^2s1>");
            },
            [](tags::Artin const& t) { return artin(t.graph, false); },
            [](tags::Coxeter const& t) { return artin(t.graph, true); },
            [](tags::Raag const& t) {
              LabeledGraph graph{t.graph.vertices, {}};
              for (auto const& [v, w] : t.graph.edges) {
                graph.edges.push_back({v, w, 2});
              }
              return artin(graph, false);
            },
            [](tags::Toric const& t) {
              require(t.p >= 1 && t.q >= 1 && std::gcd(t.p, t.q) == 1, "toric link needs gcd(p,q) = 1");
              return Presentation({"a", "b"}, {g(0, t.p) * g(1, -static_cast<long>(t.q))});
            },
            [](tags::ToricEven const& t) {
              require(t.r >= 1, "toric parameter must be positive");
              Word const ab = g(0) * g(1);
              Word const ba = g(1) * g(0);
              return Presentation({"a", "b"}, {ab.pow(t.r) * ba.pow(t.r).inverse()});
            },
            [](tags::GPoly const& t) { return gpoly(t.coeffs, 0); },
            [](tags::GPolyMod const& t) {
              require(t.p >= 2, "modulus must be at least 2");
              return gpoly(t.coeffs, t.p);
            },
            [](tags::Gr const& t) {
              require(t.p >= 1 && t.q >= 1 && t.r >= 1, "exponents must be positive");
              Word const abc = g(0) * g(1) * g(2);
              return Presentation({"a", "b", "c"},
                                  {g(0, t.p) * g(1, -static_cast<long>(t.q)),
                                   g(1, t.q) * g(2, -static_cast<long>(t.r)), g(2, t.r) * abc.inverse()});
            },
            [](tags::Triangle const& t) {
              require(t.p >= 1 && t.q >= 1 && t.r >= 1, "exponents must be positive");
              return Presentation({"a", "b"}, {g(0, t.p), g(1, t.q), (g(0) * g(1)).pow(t.r)});
            },
            [](tags::Surface const& t) {
              require(t.g >= 1, "genus must be at least 1");
              std::vector<std::string> names;
              for (unsigned i = 1; i <= t.g; ++i) {
                names.push_back("A" + std::to_string(i));
              }
              for (unsigned i = 1; i <= t.g; ++i) {
                names.push_back("B" + std::to_string(i));
              }
              Word r;
              for (GenIndex i = 0; i < t.g; ++i) {
                r *= commutator(g(i), g(t.g + i));
              }
              return Presentation(std::move(names), {r});
            },
            [](tags::SurfaceCentralExt const& t) {
              require(t.g >= 1, "genus must be at least 1");
              std::vector<std::string> names;
              for (unsigned i = 1; i <= t.g; ++i) {
                names.push_back("A" + std::to_string(i));
              }
              for (unsigned i = 1; i <= t.g; ++i) {
                names.push_back("B" + std::to_string(i));
              }
              names.emplace_back("t");
              GenIndex const tt = 2 * t.g;
              Word           r;
              for (GenIndex i = 0; i < t.g; ++i) {
                r *= commutator(g(i), g(t.g + i));
              }
              std::vector<Word> relators{t.p == 0 ? r : r * g(tt, -t.p)};
              for (GenIndex i = 0; i < tt; ++i) {
                relators.push_back(commutator(g(i), g(tt)));
              }
              return Presentation(std::move(names), std::move(relators));
            },
            [](tags::Cyclic const& t) {
              require(t.n >= 1, "cyclic order must be positive");
              return Presentation({"a"}, {g(0, t.n)});
            },
            [](tags::Abelian const& t) {
              auto const&              inv = t.invariants;
              std::size_t const        n   = inv.free_rank() + inv.torsion().size();
              std::vector<std::string> names;
              for (std::size_t i = 1; i <= n; ++i) {
                names.push_back("e" + std::to_string(i));
              }
              std::vector<Word> relators;
              for (std::size_t i = 0; i < inv.torsion().size(); ++i) {
                require(inv.torsion()[i] <= 1'000'000, "torsion coefficient too large to present");
                relators.push_back(g(static_cast<GenIndex>(i), inv.torsion()[i].convert_to<long>()));
              }
              for (GenIndex i = 0; i < n; ++i) {
                for (GenIndex j = i + 1; j < n; ++j) {
                  relators.push_back(commutator(g(i), g(j)));
                }
              }
              return Presentation(std::move(names), std::move(relators));
            },
            [](tags::DirectProduct const& t) {
              require(t.left && t.right, "product needs two factors");
              return combine(build(*t.left), build(*t.right), true);
            },
            [](tags::FreeProduct const& t) {
              require(t.left && t.right, "free product needs two factors");
              return combine(build(*t.left), build(*t.right), false);
            },
            [](tags::QuinticExplicit const& t) {
              for (auto const& c : kQuintics) {
                if (t.case_id == c.id) {
                  return parse_presentation(c.text);
                }
              }
              throw Error("unknown quintic case '" + t.case_id + "'");
            },
        },
        tag.value);
  }

  namespace {

    std::vector<long> parse_numbers(std::string_view s) {
      std::vector<long> out;
      std::size_t       pos = 0;
      while (pos <= s.size()) {
        std::size_t const comma = s.find(',', pos);
        std::string const part(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos));
        std::size_t used = 0;
        long        v    = 0;
        try {
          v = std::stol(part, &used);
        } catch (std::exception const&) {
          throw Error("expected a number, got '" + part + "'");
        }
        if (used != part.size()) {
          throw Error("expected a number, got '" + part + "'");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) {
          break;
        }
        pos = comma + 1;
      }
      return out;
    }

    unsigned to_unsigned(long v) {
      require(v >= 0, "parameter must be non-negative");
      return static_cast<unsigned>(v);
    }

    std::vector<unsigned> parse_naturals(std::string_view s, std::size_t count) {
      auto const nums = parse_numbers(s);
      require(nums.size() == count, "expected " + std::to_string(count) + " parameters");
      std::vector<unsigned> out;
      for (long v : nums) {
        out.push_back(to_unsigned(v));
      }
      return out;
    }

    // "333" or "3,3,3"
    std::vector<unsigned> parse_triple(std::string_view s) {
      if (s.find(',') == std::string_view::npos && s.size() == 3) {
        std::vector<unsigned> out;
        for (char c : s) {
          require(std::isdigit(static_cast<unsigned char>(c)) != 0, "bad label triple");
          out.push_back(static_cast<unsigned>(c - '0'));
        }
        return out;
      }
      return parse_naturals(s, 3);
    }

    // "n:v-w-m,..." for Artin/Coxeter, "n:v-w,..." for RAAG
    std::pair<unsigned, std::vector<std::vector<unsigned>>> parse_graph(std::string_view s,
                                                                        std::size_t      arity) {
      std::size_t const colon = s.find(':');
      unsigned const    n     = parse_naturals(s.substr(0, colon), 1)[0];
      std::vector<std::vector<unsigned>> edges;
      if (colon != std::string_view::npos && colon + 1 < s.size()) {
        std::string_view rest = s.substr(colon + 1);
        std::size_t      pos  = 0;
        while (pos <= rest.size()) {
          std::size_t const comma = rest.find(',', pos);
          std::string       part(rest.substr(pos, comma == std::string_view::npos ? rest.npos : comma - pos));
          std::replace(part.begin(), part.end(), '-', ',');
          edges.push_back(parse_naturals(part, arity));
          if (comma == std::string_view::npos) {
            break;
          }
          pos = comma + 1;
        }
      }
      return {n, edges};
    }

    LabeledGraph labeled_graph(std::string_view s) {
      if (s.find(':') == std::string_view::npos) {
        auto const t = parse_triple(s);
        return LabeledGraph::triangle(t[0], t[1], t[2]);
      }
      auto [n, edges] = parse_graph(s, 3);
      LabeledGraph graph{n, {}};
      for (auto const& e : edges) {
        graph.edges.push_back({e[0], e[1], e[2]});
      }
      return graph;
    }

    // Splits "A;B" at the top-level semicolon.
    std::pair<std::string_view, std::string_view> split_pair(std::string_view s) {
      int depth = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
          ++depth;
        } else if (s[i] == ')') {
          --depth;
        } else if (s[i] == ';' && depth == 0) {
          return {s.substr(0, i), s.substr(i + 1)};
        }
      }
      throw Error("expected 'A;B' inside the product");
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::string join(std::vector<long> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return out;
    }

    bool is_triangle(LabeledGraph const& graph) {
      return graph.vertices == 3 && graph.edges.size() == 3 && graph.edges[0].v == 0
             && graph.edges[0].w == 1 && graph.edges[1].v == 1 && graph.edges[1].w == 2
             && graph.edges[2].v == 0 && graph.edges[2].w == 2;
    }

    std::string graph_text(LabeledGraph const& graph) {
      if (is_triangle(graph)) {
        bool const small = std::all_of(graph.edges.begin(), graph.edges.end(),
                                       [](auto const& e) { return e.label < 10; });
        std::string out;
        for (auto const& e : graph.edges) {
          out += (small || out.empty() ? "" : ",") + std::to_string(e.label);
        }
        return out;
      }
      std::string out = std::to_string(graph.vertices) + ":";
      for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        auto const& e = graph.edges[i];
        out += (i == 0 ? "" : ",") + std::to_string(e.v) + "-" + std::to_string(e.w) + "-"
               + std::to_string(e.label);
      }
      return out;
    }

    std::string poly_text(std::vector<long> const& c) {
      std::string out;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) {
          continue;
        }
        long const  mag  = std::abs(c[i]);
        std::string term = i == 0 ? std::to_string(mag)
                           : (mag == 1 ? "" : std::to_string(mag))
                                 + (i == 1 ? "t" : "t^" + std::to_string(i));
        if (out.empty()) {
          out = (c[i] < 0 ? "-" : "") + term;
        } else {
          out += (c[i] < 0 ? "-" : "+") + term;
        }
      }
      return out.empty() ? "0" : out;
    }

  }  // namespace

  GroupTag parse_tag(std::string_view text) {
    text = trim(text);
    auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
    if (starts("prod(") || starts("fprod(")) {
      require(text.back() == ')', "unbalanced product");
      std::size_t const open  = text.find('(');
      auto [a, b]             = split_pair(text.substr(open + 1, text.size() - open - 2));
      TagPtr const left       = make_tag(parse_tag(a));
      TagPtr const right      = make_tag(parse_tag(b));
      if (starts("prod(")) {
        return {tags::DirectProduct{left, right}};
      }
      return {tags::FreeProduct{left, right}};
    }
    if (text == "spherebraid3") {
      return {tags::SphereBraid3{}};
    }
    std::size_t const colon = text.find(':');
    require(colon != std::string_view::npos, "unknown group tag '" + std::string(text) + "'");
    std::string const kind(text.substr(0, colon));
    std::string_view  arg = text.substr(colon + 1);
    if (kind == "free") {
      return {tags::Free{parse_naturals(arg, 1)[0]}};
    }
    if (kind == "braid") {
      return {tags::Braid{parse_naturals(arg, 1)[0]}};
    }
    if (kind == "artin") {
      return {tags::Artin{labeled_graph(arg)}};
    }
    if (kind == "coxeter") {
      return {tags::Coxeter{labeled_graph(arg)}};
    }
    if (kind == "raag") {
      auto [n, edges] = parse_graph(arg, 2);
      SimpleGraph graph{n, {}};
      for (auto const& e : edges) {
        graph.edges.emplace_back(e[0], e[1]);
      }
      return {tags::Raag{graph}};
    }
    if (kind == "toric") {
      auto const v = parse_naturals(arg, 2);
      return {tags::Toric{v[0], v[1]}};
    }
    if (kind == "toriceven") {
      return {tags::ToricEven{parse_naturals(arg, 1)[0]}};
    }
    if (kind == "gpoly") {
      return {tags::GPoly{parse_numbers(arg)}};
    }
    if (kind == "gpolymod") {
      std::size_t const c2 = arg.find(':');
      require(c2 != std::string_view::npos, "gpolymod needs 'p:coefficients'");
      return {tags::GPolyMod{parse_naturals(arg.substr(0, c2), 1)[0], parse_numbers(arg.substr(c2 + 1))}};
    }
    if (kind == "gr") {
      auto const v = parse_naturals(arg, 3);
      return {tags::Gr{v[0], v[1], v[2]}};
    }
    if (kind == "triangle") {
      auto const v = parse_naturals(arg, 3);
      return {tags::Triangle{v[0], v[1], v[2]}};
    }
    if (kind == "surface") {
      return {tags::Surface{parse_naturals(arg, 1)[0]}};
    }
    if (kind == "surfext") {
      auto const v = parse_numbers(arg);
      require(v.size() == 2, "surfext needs 'g,p'");
      return {tags::SurfaceCentralExt{to_unsigned(v[0]), v[1]}};
    }
    if (kind == "cyclic") {
      return {tags::Cyclic{parse_naturals(arg, 1)[0]}};
    }
    if (kind == "abelian") {
      std::size_t const   c2   = arg.find(':');
      unsigned const      rank = parse_naturals(arg.substr(0, c2), 1)[0];
      std::vector<BigInt> torsion;
      if (c2 != std::string_view::npos && c2 + 1 < arg.size()) {
        for (long d : parse_numbers(arg.substr(c2 + 1))) {
          torsion.emplace_back(d);
        }
      }
      return {tags::Abelian{InvariantFactors(rank, torsion)}};
    }
    if (kind == "quintic") {
      std::string id(arg);
      auto const& ids = quintic_case_ids();
      require(std::find(ids.begin(), ids.end(), id) != ids.end(), "unknown quintic case '" + id + "'");
      return {tags::QuinticExplicit{id}};
    }
    throw Error("unknown group tag '" + std::string(text) + "'");
  }

  std::string format_tag(GroupTag const& tag) {
    return std::visit(
        Overloaded{
            [](tags::Free const& t) { return "free:" + std::to_string(t.n); },
            [](tags::Braid const& t) { return "braid:" + std::to_string(t.n); },
            [](tags::SphereBraid3 const&) { return std::string("spherebraid3"); },
            [](tags::Artin const& t) { return "artin:" + graph_text(t.graph); },
            [](tags::Coxeter const& t) { return "coxeter:" + graph_text(t.graph); },
            [](tags::Raag const& t) {
              std::string out = "raag:" + std::to_string(t.graph.vertices) + ":";
              for (std::size_t i = 0; i < t.graph.edges.size(); ++i) {
                out += (i == 0 ? "" : ",") + std::to_string(t.graph.edges[i].first) + "-"
                       + std::to_string(t.graph.edges[i].second);
              }
              return out;
            },
            [](tags::Toric const& t) { return "toric:" + std::to_string(t.p) + "," + std::to_string(t.q); },
            [](tags::ToricEven const& t) { return "toriceven:" + std::to_string(t.r); },
            [](tags::GPoly const& t) { return "gpoly:" + join(t.coeffs); },
            [](tags::GPolyMod const& t) { return "gpolymod:" + std::to_string(t.p) + ":" + join(t.coeffs); },
            [](tags::Gr const& t) {
              return "gr:" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r);
            },
            [](tags::Triangle const& t) {
              return "triangle:" + std::to_string(t.p) + "," + std::to_string(t.q) + ","
                     + std::to_string(t.r);
            },
            [](tags::Surface const& t) { return "surface:" + std::to_string(t.g); },
            [](tags::SurfaceCentralExt const& t) {
              return "surfext:" + std::to_string(t.g) + "," + std::to_string(t.p);
            },
            [](tags::Cyclic const& t) { return "cyclic:" + std::to_string(t.n); },
            [](tags::Abelian const& t) {
              std::string out = "abelian:" + std::to_string(t.invariants.free_rank());
              for (std::size_t i = 0; i < t.invariants.torsion().size(); ++i) {
                out += (i == 0 ? ":" : ",") + t.invariants.torsion()[i].str();
              }
              return out;
            },
            [](tags::DirectProduct const& t) {
              return "prod(" + format_tag(*t.left) + ";" + format_tag(*t.right) + ")";
            },
            [](tags::FreeProduct const& t) {
              return "fprod(" + format_tag(*t.left) + ";" + format_tag(*t.right) + ")";
            },
            [](tags::QuinticExplicit const& t) { return "quintic:" + t.case_id; },
        },
        tag.value);
  }

  std::string display_name(GroupTag const& tag) {
    auto wrap = [](GroupTag const& t) {
      std::string const s = display_name(t);
      bool const compound = std::holds_alternative<tags::DirectProduct>(t.value)
                            || std::holds_alternative<tags::FreeProduct>(t.value)
                            || std::holds_alternative<tags::Abelian>(t.value);
      return compound ? "(" + s + ")" : s;
    };
    return std::visit(
        Overloaded{
            [](tags::Free const& t) { return t.n == 1 ? std::string("Z") : "F_" + std::to_string(t.n); },
            [](tags::Braid const& t) { return "B_" + std::to_string(t.n); },
            [](tags::SphereBraid3 const&) { return std::string("B_3(S^2)"); },
            [](tags::Artin const& t) {
              if (is_triangle(t.graph)) {
                std::string out = "Art_{";
                for (auto const& e : t.graph.edges) {
                  out += std::to_string(e.label);
                }
                return out + "}";
              }
              return "Art(" + graph_text(t.graph) + ")";
            },
            [](tags::Coxeter const& t) {
              if (is_triangle(t.graph)) {
                std::string out = "Cox_{";
                for (auto const& e : t.graph.edges) {
                  out += std::to_string(e.label);
                }
                return out + "}";
              }
              return "Cox(" + graph_text(t.graph) + ")";
            },
            [](tags::Raag const& t) { return "RAAG(" + format_tag({t}).substr(5) + ")"; },
            [](tags::Toric const& t) { return "T_{" + std::to_string(t.p) + "," + std::to_string(t.q) + "}"; },
            [](tags::ToricEven const& t) { return "T_{2," + std::to_string(2 * t.r) + "}"; },
            [](tags::GPoly const& t) { return "G(" + poly_text(t.coeffs) + ")"; },
            [](tags::GPolyMod const& t) {
              return "G_" + std::to_string(t.p) + "(" + poly_text(t.coeffs) + ")";
            },
            [](tags::Gr const& t) {
              return "Gr<" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r) + ">";
            },
            [](tags::Triangle const& t) {
              return "Delta(" + std::to_string(t.p) + "," + std::to_string(t.q) + "," + std::to_string(t.r)
                     + ")";
            },
            [](tags::Surface const& t) { return "pi_1(S_" + std::to_string(t.g) + ")"; },
            [](tags::SurfaceCentralExt const& t) {
              return "Z-ext(pi_1(S_" + std::to_string(t.g) + "), " + std::to_string(t.p) + ")";
            },
            [](tags::Cyclic const& t) { return "Z/" + std::to_string(t.n); },
            [](tags::Abelian const& t) { return to_string(t.invariants); },
            [&](tags::DirectProduct const& t) { return wrap(*t.left) + " x " + wrap(*t.right); },
            [&](tags::FreeProduct const& t) { return wrap(*t.left) + " * " + wrap(*t.right); },
            [](tags::QuinticExplicit const& t) { return "Pi(" + t.case_id + ")"; },
        },
        tag.value);
  }

  nlohmann::json to_json(GroupTag const& tag) {
    std::string const text = format_tag(tag);
    std::string const type = text.substr(0, text.find_first_of(":("));
    return {{"type", type}, {"text", text}, {"name", display_name(tag)}};
  }

  GroupTag tag_from_json(nlohmann::json const& j) {
    if (j.is_string()) {
      return parse_tag(j.get<std::string>());
    }
    return parse_tag(j.at("text").get<std::string>());
  }

  bool equivalent_up_to_relabeling(Presentation const& p, Presentation const& q) {
    if (p.num_generators() != q.num_generators() || p.relators().size() != q.relators().size()) {
      return false;
    }
    std::size_t const n = p.num_generators();
    auto              canonical_multiset = [](std::vector<Word> const& rs) {
      std::vector<Word> out;
      for (Word const& r : rs) {
        out.push_back(r.relator_canonical());
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    auto const           target = canonical_multiset(q.relators());
    std::vector<GenIndex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Word> mapped;
      for (Word const& r : p.relators()) {
        std::vector<Letter> letters;
        for (Letter x : r) {
          letters.push_back({perm[x.gen], x.sign});
        }
        mapped.emplace_back(letters);
      }
      if (canonical_multiset(mapped) == target) {
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

}  // namespace curvepi
