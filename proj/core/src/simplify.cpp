#include "curvepi/simplify.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>

namespace curvepi {

  std::vector<Word> normalize_relators(std::vector<Word> const& relators) {
    std::vector<Word>        out;
    std::unordered_set<Word> seen;
    for (Word const& r : relators) {
      Word const c = r.cyclically_reduced();
      if (c.empty()) {
        continue;
      }
      if (seen.insert(c.relator_canonical()).second) {
        out.push_back(c);
      }
    }
    return out;
  }

  namespace {

    std::size_t total_length(std::vector<Word> const& relators) {
      std::size_t n = 0;
      for (Word const& r : relators) {
        n += r.size();
      }
      return n;
    }

    struct State {
      std::vector<std::string> names;
      std::vector<Word>        relators;
    };

    // Replaces generator g by `value` everywhere and drops it from the
    // generator list, shifting higher indices down.
    State eliminate(State const& s, GenIndex g, Word const& value, std::size_t skip) {
      State out;
      for (std::size_t i = 0; i < s.names.size(); ++i) {
        if (i != g) {
          out.names.push_back(s.names[i]);
        }
      }
      auto shift = [g](Letter x) { return Letter{x.gen > g ? x.gen - 1 : x.gen, x.sign}; };
      std::vector<Letter> v;
      for (Letter x : value) {
        v.push_back(shift(x));
      }
      Word const image = Word(v);
      for (std::size_t i = 0; i < s.relators.size(); ++i) {
        if (i == skip) {
          continue;
        }
        Word r;
        for (Letter x : s.relators[i]) {
          if (x.gen == g) {
            r *= x.sign > 0 ? image : image.inverse();
          } else {
            r *= Word{shift(x)};
          }
        }
        out.relators.push_back(std::move(r));
      }
      out.relators = normalize_relators(out.relators);
      return out;
    }

    std::optional<State> try_eliminate(State const& s, std::size_t length_cap) {
      struct Candidate {
        std::size_t length;
        GenIndex    gen;
        std::size_t relator;
      };
      std::vector<Candidate> candidates;
      for (std::size_t i = 0; i < s.relators.size(); ++i) {
        Word const& r = s.relators[i];
        for (GenIndex g = 0; g < s.names.size(); ++g) {
          if (r.occurrences(g) == 1) {
            candidates.push_back({r.size(), g, i});
          }
        }
      }
      std::sort(candidates.begin(), candidates.end(), [](Candidate const& x, Candidate const& y) {
        if (x.length != y.length) {
          return x.length < y.length;
        }
        if (x.gen != y.gen) {
          return x.gen > y.gen;
        }
        return x.relator < y.relator;
      });
      for (Candidate const& c : candidates) {
        Word const& r = s.relators[c.relator];
        std::size_t pos = 0;
        while (r[pos].gen != c.gen) {
          ++pos;
        }
        // r rotated to g^e u = 1, so g = u^-1 when e = 1 and g = u when e = -1.
        Word const rot   = r.rotated(pos);
        Word const rest  = rot.subword(1, rot.size() - 1);
        Word const value = rot[0].sign > 0 ? rest.inverse() : rest;
        State      next  = eliminate(s, c.gen, value, c.relator);
        if (total_length(next.relators) <= length_cap) {
          return next;
        }
      }
      return std::nullopt;
    }

    bool try_shorten(State& s) {
      for (std::size_t j = 0; j < s.relators.size(); ++j) {
        Word const& shorter = s.relators[j];
        std::size_t const m = shorter.size();
        for (std::size_t i = 0; i < s.relators.size(); ++i) {
          if (i == j || s.relators[i].size() < m) {
            continue;
          }
          Word const& target = s.relators[i];
          std::size_t const n = target.size();
          for (bool inverted : {false, true}) {
            Word const base = inverted ? shorter.inverse() : shorter;
            for (std::size_t k = 0; k < m; ++k) {
              Word const c = base.rotated(k);
              // Longest usable prefix first.
              for (std::size_t len = std::min(m, n); 2 * len > m; --len) {
                for (std::size_t at = 0; at < n; ++at) {
                  bool match = true;
                  for (std::size_t q = 0; q < len && match; ++q) {
                    match = target[(at + q) % n] == c[q];
                  }
                  if (!match) {
                    continue;
                  }
                  Word const tail = target.rotated(at).subword(len, n - len);
                  Word const repl = c.subword(len, m - len).inverse();
                  s.relators[i]   = (repl * tail).cyclically_reduced();
                  s.relators      = normalize_relators(s.relators);
                  return true;
                }
              }
            }
          }
        }
      }
      return false;
    }

  }  // namespace

  Presentation simplify(Presentation const& p, DerivationBudget const& budget) {
    budget.validate();
    State s{p.generators(), normalize_relators(p.relators())};
    std::size_t const cap = 4 * total_length(p.relators());
    for (std::size_t moves = 0; moves < budget.max_states; ++moves) {
      if (auto next = try_eliminate(s, cap)) {
        s = std::move(*next);
        continue;
      }
      if (!try_shorten(s)) {
        break;
      }
    }
    return Presentation(std::move(s.names), std::move(s.relators));
  }

}  // namespace curvepi
