#include "curvepi/schreier.hpp"

#include <utility>

#include "curvepi/error.hpp"

namespace curvepi {

  Transversal schreier_transversal(CosetTable const& t) {
    std::size_t const n = t.size();
    Transversal       tr(n);
    std::vector<bool> seen(n, false);
    std::vector<Coset> order{0};
    seen[0] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      Coset const c = order[i];
      for (GenIndex g = 0; g < t.num_generators(); ++g) {
        Coset const d = t.act(c, gen(g));
        if (d < n && !seen[d]) {
          seen[d] = true;
          tr[d]   = tr[c] * Word{gen(g)};
          order.push_back(d);
        }
      }
    }
    if (order.size() != n) {
      throw Error("coset table is not transitive under positive generators");
    }
    return tr;
  }

  namespace {

    class Rewriter {
     public:
      Rewriter(CosetTable const& t, Transversal const& tr) : t_(t), trivial_(t.size() * t.num_generators()) {
        if (tr.size() != t.size()) {
          throw Error("transversal does not match the coset table");
        }
        for (Coset k = 0; k < t.size(); ++k) {
          for (GenIndex a = 0; a < t.num_generators(); ++a) {
            trivial_[schreier_index(k, a, t.num_generators())] =
                (tr[k] * Word{gen(a)}) == tr[t.act(k, gen(a))];
          }
        }
      }

      bool trivial(GenIndex full) const {
        return trivial_[full];
      }

      Word operator()(Word const& w) const {
        std::vector<Letter> out;
        Coset               k     = 0;
        std::size_t const   ngens = t_.num_generators();
        for (Letter x : w) {
          if (x.sign > 0) {
            GenIndex const s = schreier_index(k, x.gen, ngens);
            if (!trivial_[s]) {
              out.push_back(gen(s));
            }
            k = t_.act(k, x);
          } else {
            Coset const    k2 = t_.act(k, x);
            GenIndex const s  = schreier_index(k2, x.gen, ngens);
            if (!trivial_[s]) {
              out.push_back(inv(s));
            }
            k = k2;
          }
        }
        if (k != 0) {
          throw Error("word does not lie in the subgroup");
        }
        return Word(out);
      }

     private:
      CosetTable const& t_;
      std::vector<bool> trivial_;
    };

  }  // namespace

  std::vector<SchreierGenerator> schreier_generators(CosetTable const& t, Transversal const& tr) {
    Rewriter const                 rw(t, tr);
    std::vector<SchreierGenerator> out;
    for (Coset k = 0; k < t.size(); ++k) {
      for (GenIndex a = 0; a < t.num_generators(); ++a) {
        if (!rw.trivial(schreier_index(k, a, t.num_generators()))) {
          out.push_back({k, a, tr[k] * Word{gen(a)} * tr[t.act(k, gen(a))].inverse()});
        }
      }
    }
    return out;
  }

  Word rewrite(CosetTable const& t, Transversal const& tr, Word const& w) {
    return Rewriter(t, tr)(w);
  }

  Presentation subgroup_presentation(Presentation const& p, CosetTable const& t) {
    if (t.num_generators() != p.num_generators()) {
      throw Error("coset table does not match the presentation");
    }
    Transversal const tr = schreier_transversal(t);
    Rewriter const    rw(t, tr);
    std::size_t const ngens = p.num_generators();

    std::vector<GenIndex>    compact(t.size() * ngens, 0);
    std::vector<std::string> names;
    for (Coset k = 0; k < t.size(); ++k) {
      for (GenIndex a = 0; a < ngens; ++a) {
        GenIndex const s = schreier_index(k, a, ngens);
        if (!rw.trivial(s)) {
          compact[s] = static_cast<GenIndex>(names.size());
          names.push_back("s" + std::to_string(k) + "_" + p.generators()[a]);
        }
      }
    }

    std::vector<Word> relators;
    for (Coset k = 0; k < t.size(); ++k) {
      for (Word const& r : p.relators()) {
        Word const          full = rw(tr[k] * r * tr[k].inverse());
        std::vector<Letter> letters;
        letters.reserve(full.size());
        for (Letter x : full) {
          letters.push_back({compact[x.gen], x.sign});
        }
        relators.emplace_back(letters);
      }
    }
    return Presentation(std::move(names), std::move(relators));
  }

}  // namespace curvepi
