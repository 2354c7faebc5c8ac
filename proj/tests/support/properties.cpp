#include "properties.hpp"

#include <algorithm>
#include <sstream>

#include "curvepi/abelian.hpp"
#include "curvepi/coset_table.hpp"
#include "curvepi/presentation.hpp"
#include "curvepi/schreier.hpp"
#include "curvepi/word.hpp"
#include "oracles.hpp"

namespace curvepi::test {

  namespace {

    void record(PropertyResult& r, bool ok, std::string const& what) {
      ++r.cases;
      if (!ok) {
        if (r.failures == 0) {
          r.first_failure = what;
        }
        ++r.failures;
      }
    }

    BigInt abs(BigInt const& x) {
      return x < 0 ? BigInt(-x) : x;
    }

    std::string matrix_string(BigMatrix const& m) {
      std::ostringstream os;
      os << '[';
      for (auto const& row : m) {
        os << '[';
        for (std::size_t j = 0; j < row.size(); ++j) {
          os << (j ? "," : "") << row[j];
        }
        os << ']';
      }
      os << ']';
      return os.str();
    }

    // Errors found in a Smith form, empty if none.
    std::string check_smith(BigMatrix const& m) {
      std::size_t const rows = m.size();
      std::size_t const cols = m[0].size();
      IntMatrix         im(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          im(i, j) = m[i][j];
        }
      }
      SmithForm const s = smith_normal_form(im, true);
      BigMatrix const d = to_big(s.D);
      if (d.size() != rows || d[0].size() != cols) {
        return "shape";
      }
      std::vector<BigInt> diag;
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (i != j && d[i][j] != 0) {
            return "not diagonal";
          }
        }
        if (i < cols) {
          diag.push_back(d[i][i]);
        }
      }
      std::size_t rank = 0;
      for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] < 0) {
          return "negative diagonal entry";
        }
        if (diag[i] != 0) {
          if (rank != i) {
            return "zero before nonzero on diagonal";
          }
          ++rank;
        }
        if (i > 0 && diag[i - 1] != 0 && diag[i] % diag[i - 1] != 0) {
          return "divisibility chain broken";
        }
      }
      if (rank != s.rank) {
        return "rank mismatch";
      }
      if (multiply(multiply(to_big(s.U), m), to_big(s.V)) != d) {
        return "U M V != D";
      }
      if (abs(bareiss_determinant(to_big(s.U))) != 1 || abs(bareiss_determinant(to_big(s.V))) != 1) {
        return "transform not unimodular";
      }
      BigInt prefix = 1;
      for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        prefix *= diag[k - 1];
        if (minor_gcd(m, k) != prefix) {
          return "determinantal divisor " + std::to_string(k);
        }
      }
      return {};
    }

    bool transitive(std::vector<Permutation> const& gens, std::size_t k) {
      std::vector<bool>        seen(k, false);
      std::vector<std::size_t> queue{0};
      seen[0] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (auto const& g : gens) {
          std::size_t const next = g[queue[head]];
          if (!seen[next]) {
            seen[next] = true;
            queue.push_back(next);
          }
        }
      }
      return queue.size() == k;
    }

    std::vector<std::string> names(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::string(1, static_cast<char>('a' + i)));
      }
      return out;
    }

    // Every relator closes at every coset, every subgroup word fixes coset 0,
    // and each generator acts as a permutation.
    bool table_closes(Presentation const& p, std::vector<Word> const& h, CosetTable const& t) {
      for (std::size_t g = 0; g < t.num_generators(); ++g) {
        std::vector<bool> hit(t.size(), false);
        for (Coset c = 0; c < t.size(); ++c) {
          Coset const d = t.act(c, gen(static_cast<GenIndex>(g)));
          if (d >= t.size() || hit[d] || t.act(d, inv(static_cast<GenIndex>(g))) != c) {
            return false;
          }
          hit[d] = true;
        }
      }
      for (Coset c = 0; c < t.size(); ++c) {
        for (auto const& r : p.relators()) {
          Coset x = c;
          for (Letter l : r) {
            x = t.act(x, l);
          }
          if (x != c) {
            return false;
          }
        }
      }
      for (auto const& w : h) {
        Coset x = 0;
        for (Letter l : w) {
          x = t.act(x, l);
        }
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  PropertyResult snf_determinantal_divisors(std::uint64_t seed, std::size_t count) {
    PropertyResult r{"SNF determinantal divisors", 0, 0, {}};
    Rng            rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const rows = static_cast<std::size_t>(rng.uniform(1, 6));
      std::size_t const cols = static_cast<std::size_t>(rng.uniform(1, 6));
      BigMatrix         m;
      if (rng.uniform(0, 3) == 0) {
        // Low-rank product to exercise zero divisors.
        std::size_t const inner = static_cast<std::size_t>(rng.uniform(1, 3));
        m = multiply(random_matrix(rng, rows, inner, 4), random_matrix(rng, inner, cols, 4));
      } else {
        m = random_matrix(rng, rows, cols, 9);
      }
      std::string const err = check_smith(m);
      record(r, err.empty(), err + " on " + matrix_string(m));
    }
    return r;
  }

  PropertyResult nielsen_schreier_rank(std::uint64_t seed, unsigned max_index, unsigned max_rank,
                                       std::size_t trials_per_shape) {
    PropertyResult r{"Nielsen-Schreier rank", 0, 0, {}};
    Rng            rng(seed);
    for (unsigned k = 1; k <= max_rank; ++k) {
      Presentation const free(names(k), {});
      for (unsigned n = 1; n <= max_index; ++n) {
        for (std::size_t trial = 0; trial < trials_per_shape; ++trial) {
          std::vector<Permutation> gens;
          do {
            gens.clear();
            for (unsigned g = 0; g < k; ++g) {
              gens.push_back(random_permutation(rng, n));
            }
          } while (!transitive(gens, n));
          CosetTable const   t        = from_permutation_action(gens);
          Presentation const sub      = subgroup_presentation(free, t);
          std::size_t const  expected = n * (k - 1) + 1;
          std::ostringstream what;
          what << "index " << n << " in F_" << k << ": " << sub.num_generators() << " generators, "
               << sub.relators().size() << " relators";
          bool ok = t.size() == n && sub.num_generators() == expected && sub.relators().empty()
                    && abelian_invariants(sub) == InvariantFactors(expected, {});
          // The Schreier generators, read back as words in F_k, span a subgroup
          // whose enumeration recovers the index.
          if (ok) {
            std::vector<Word> h;
            for (auto const& s : schreier_generators(t, schreier_transversal(t))) {
              h.push_back(s.value);
            }
            auto const e = todd_coxeter(free, h, EnumLimits{1000, 100'000});
            ok           = std::holds_alternative<CosetTable>(e) && std::get<CosetTable>(e).size() == n;
            if (!ok) {
              what << "; re-enumeration did not give index " << n;
            }
          }
          record(r, ok, what.str());
        }
      }
    }
    return r;
  }

  PropertyResult coset_table_fuzz(std::uint64_t seed, std::size_t count) {
    PropertyResult r{"coset table certificates", 0, 0, {}};
    Rng            rng(seed);
    std::size_t    completed = 0;
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const ngens = static_cast<std::size_t>(rng.uniform(1, 3));
      std::vector<Word> rels;
      for (std::size_t g = 0; g < ngens; ++g) {
        rels.push_back(Word::generator(static_cast<GenIndex>(g), rng.uniform(2, 5)));
      }
      std::size_t const extra = static_cast<std::size_t>(rng.uniform(0, 2));
      for (std::size_t j = 0; j < extra; ++j) {
        Word w = random_word(rng, ngens, 8);
        if (!w.empty()) {
          rels.push_back(w);
        }
      }
      Presentation const p(names(ngens), rels);
      std::vector<Word>  h;
      if (rng.uniform(0, 2) == 0) {
        h.push_back(random_word(rng, ngens, 4));
      }
      auto const e = todd_coxeter(p, h, EnumLimits{3000, 200'000});
      if (auto const* t = std::get_if<CosetTable>(&e)) {
        ++completed;
        bool ok = validate_table(p, h, *t).ok() && table_closes(p, h, *t);
        if (ok && h.empty()) {
          // Regular action: the generated permutation group has order = index.
          ok = permutation_group_order(permutation_rep(*t)) == t->size();
        }
        record(r, ok, format_presentation(p) + " over " + std::to_string(h.size()) + " words");
        // A corrupted table must be rejected.
        if (t->size() > 1) {
          std::vector<Coset> entries = t->entries();
          std::size_t const  slot =
              static_cast<std::size_t>(rng.uniform(0, static_cast<long>(entries.size()) - 1));
          entries[slot] = (entries[slot] + 1) % static_cast<Coset>(t->size());
          CosetTable const bad(t->num_generators(), entries, t->subgroup());
          record(r, !validate_table(p, h, bad).ok(), "corrupted table accepted for " + format_presentation(p));
        }
      }
    }
    if (completed < count / 4) {
      record(r, false, "too few enumerations completed: " + std::to_string(completed));
    }
    return r;
  }

  PropertyResult free_reduction_laws(std::uint64_t seed, std::size_t count) {
    PropertyResult r{"free reduction laws", 0, 0, {}};
    Rng            rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t const   ngens = static_cast<std::size_t>(rng.uniform(1, 4));
      std::vector<Letter> raw   = random_letters(rng, ngens, 16);
      Word const          u     = free_reduce(raw);
      Word const          v     = random_word(rng, ngens, 12);
      Word const          x     = random_word(rng, ngens, 12);
      std::vector<Letter> const naive = naive_free_reduce(raw);

      record(r, std::vector<Letter>(u.begin(), u.end()) == naive, "matches stack reduction");
      record(r, free_reduce(u.letters()) == u, "idempotent");
      record(r, (u * u.inverse()).empty() && (u.inverse() * u).empty(), "w w^-1 = e");
      record(r, (u * v).inverse() == v.inverse() * u.inverse(), "(uv)^-1 = v^-1 u^-1");
      record(r, (u * v) * x == u * (v * x), "associative");
      record(r, u.inverse().inverse() == u, "involutive inverse");

      std::vector<Letter> cat(raw);
      cat.insert(cat.end(), v.begin(), v.end());
      record(r, free_reduce(cat) == u * v, "reduce(uv) = reduce(u) reduce(v)");

      for (GenIndex g = 0; g < ngens; ++g) {
        record(r, (u * v).exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g), "exponent sum additive");
      }

      Word const c = u.cyclic_canonical();
      record(r, (x * u * x.inverse()).cyclic_canonical() == c, "conjugation invariant");
      Word const cr = u.cyclically_reduced();
      if (!cr.empty()) {
        std::size_t const k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cr.size()) - 1));
        record(r, cr.rotated(k).cyclic_canonical() == c, "rotation invariant");
      }
      record(r, u.relator_canonical() == u.inverse().relator_canonical(), "relator form inversion invariant");
      record(r, c.size() == cr.size() && free_reduce(c.letters()) == c
                    && (c.empty() || !c[0].cancels(c[c.size() - 1])),
             "canonical form cyclically reduced");
    }
    return r;
  }

  std::string describe(PropertyResult const& r) {
    std::ostringstream os;
    os << r.name << ": " << r.cases - r.failures << "/" << r.cases << " cases";
    if (r.failures) {
      os << ", first failure: " << r.first_failure;
    }
    return os.str();
  }

}  // namespace curvepi::test
