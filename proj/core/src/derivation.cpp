#include "curvepi/derivation.hpp"

#include <queue>
#include <unordered_map>
#include <utility>

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"

namespace curvepi {

  void DerivationBudget::validate() const {
    if (max_insertions == 0 || max_word_length == 0 || max_states == 0) {
      throw Error("derivation budget fields must be positive");
    }
  }

  namespace {

    struct Conjugate {
      std::size_t relator;
      bool        inverted;
      std::size_t rotation;
      Word        word;
    };

    std::vector<Conjugate> relator_conjugates(Presentation const& p) {
      std::vector<Conjugate> out;
      for (std::size_t i = 0; i < p.relators().size(); ++i) {
        Word const& r = p.relators()[i];
        for (bool inverted : {false, true}) {
          Word const base = inverted ? r.inverse() : r;
          for (std::size_t k = 0; k < base.size(); ++k) {
            out.push_back({i, inverted, k, base.rotated(k)});
          }
        }
      }
      return out;
    }

    Word insert_at(Word const& w, std::size_t pos, Word const& x) {
      std::vector<Letter> letters(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      letters.insert(letters.end(), x.begin(), x.end());
      letters.insert(letters.end(), w.begin() + static_cast<std::ptrdiff_t>(pos), w.end());
      return free_reduce(letters).cyclically_reduced();
    }

    struct Node {
      Word        word;  // canonical cyclic representative
      std::size_t parent;
      std::size_t depth;
      ProofStep   step;
    };

  }  // namespace

  DerivationResult derive_relator(Presentation const&     p,
                                  Word const&             w,
                                  DerivationBudget const& budget) {
    budget.validate();
    if (w.generator_bound() > p.num_generators()) {
      throw Error("word uses an undeclared generator");
    }
    ProofTrace trace;
    trace.start       = w;
    Word const origin = w.cyclic_canonical();
    if (origin.empty()) {
      return trace;
    }

    auto const conjugates = relator_conjugates(p);
    // Conjugates indexed by the column of their last and of their first letter.
    std::size_t const                     cols = 2 * p.num_generators();
    std::vector<std::vector<std::size_t>> by_last(cols);
    std::vector<std::vector<std::size_t>> by_first(cols);
    for (std::size_t i = 0; i < conjugates.size(); ++i) {
      Word const& x = conjugates[i].word;
      by_last[x[x.size() - 1].column()].push_back(i);
      by_first[x[0].column()].push_back(i);
    }

    std::vector<Node>                     nodes;
    std::unordered_map<Word, std::size_t> seen;
    using Entry = std::pair<std::size_t, std::size_t>;  // (length, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

    nodes.push_back({origin, 0, 0, {}});
    seen.emplace(origin, 0);
    frontier.emplace(origin.size(), 0);

    std::vector<char> tried(conjugates.size(), 0);
    std::vector<std::size_t> candidates;
    while (!frontier.empty()) {
      std::size_t const id = frontier.top().second;
      frontier.pop();
      if (nodes[id].depth >= budget.max_insertions) {
        continue;
      }
      Word const        current = nodes[id].word;
      std::size_t const depth   = nodes[id].depth;
      for (std::size_t k = 0; k < current.size(); ++k) {
        Word const u = current.rotated(k);
        // The inserted conjugate sits in front of u: it must cancel against
        // u's first letter or, cyclically, against u's last letter.
        candidates.clear();
        for (std::size_t c : by_last[u[0].inverse().column()]) {
          tried[c] = 1;
          candidates.push_back(c);
        }
        for (std::size_t c : by_first[u[u.size() - 1].inverse().column()]) {
          if (!tried[c]) {
            candidates.push_back(c);
          }
        }
        for (std::size_t c : candidates) {
          tried[c] = 0;
        }
        for (std::size_t c : candidates) {
          Conjugate const& x    = conjugates[c];
          Word const       next = insert_at(u, 0, x.word).cyclic_canonical();
          if (next.size() > budget.max_word_length || seen.contains(next)) {
            continue;
          }
          ProofStep step{k, x.relator, x.inverted, x.rotation, 0, next};
          nodes.push_back({next, id, depth + 1, std::move(step)});
          std::size_t const child = nodes.size() - 1;
          if (next.empty()) {
            std::vector<ProofStep> steps;
            for (std::size_t n = child; n != 0; n = nodes[n].parent) {
              steps.push_back(nodes[n].step);
            }
            trace.steps.assign(steps.rbegin(), steps.rend());
            return trace;
          }
          seen.emplace(next, child);
          if (seen.size() >= budget.max_states) {
            return Inconclusive{"state budget exhausted", seen.size()};
          }
          frontier.emplace(next.size(), child);
        }
      }
    }
    return Inconclusive{"search space exhausted within length and insertion bounds", seen.size()};
  }

  bool replay_trace(Presentation const& p, ProofTrace const& trace) {
    if (trace.start.generator_bound() > p.num_generators()) {
      return false;
    }
    Word current = trace.start.cyclic_canonical();
    for (ProofStep const& s : trace.steps) {
      if (s.relator >= p.relators().size()) {
        return false;
      }
      Word const& r    = p.relators()[s.relator];
      Word const  base = s.inverted ? r.inverse() : r;
      if ((current.size() > 0 && s.rotate_by >= current.size())
          || (s.relator_rotation >= base.size()) || s.position > current.size()) {
        return false;
      }
      Word const u = current.empty() ? current : current.rotated(s.rotate_by);
      current      = insert_at(u, s.position, base.rotated(s.relator_rotation)).cyclic_canonical();
      if (current != s.result) {
        return false;
      }
    }
    return current.empty();
  }

  nlohmann::json trace_to_json(ProofTrace const& trace, Presentation const& p) {
    nlohmann::json steps = nlohmann::json::array();
    for (ProofStep const& s : trace.steps) {
      steps.push_back({{"rotate_by", s.rotate_by},
                       {"relator", s.relator},
                       {"inverted", s.inverted},
                       {"relator_rotation", s.relator_rotation},
                       {"position", s.position},
                       {"result", format_word(s.result, p.generators())}});
    }
    return {{"start", format_word(trace.start, p.generators())}, {"steps", std::move(steps)}};
  }

}  // namespace curvepi
