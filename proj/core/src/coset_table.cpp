#include "curvepi/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include <nlohmann/json.hpp>

namespace curvepi {

  void EnumLimits::validate() const {
    if (max_cosets == 0 || max_deductions == 0) {
      throw Error("enumeration limits must be positive");
    }
  }

  CosetTable::CosetTable(std::size_t        num_generators,
                         std::vector<Coset> entries,
                         std::vector<Word>  subgroup)
      : ngens_(num_generators), entries_(std::move(entries)), subgroup_(std::move(subgroup)) {
    std::size_t const cols = 2 * ngens_;
    if (cols == 0) {
      size_ = entries_.empty() ? 1 : 0;
      if (!entries_.empty()) {
        throw Error("coset table without generators has no entries");
      }
      return;
    }
    if (entries_.size() % cols != 0) {
      throw Error("coset table entries are not a whole number of rows");
    }
    size_ = entries_.size() / cols;
  }

  CosetTable CosetTable::from_images(std::vector<std::vector<Coset>> const& images,
                                     std::vector<Word>                      subgroup) {
    std::size_t const ngens = images.size();
    std::size_t const n     = ngens == 0 ? 1 : images.front().size();
    std::vector<Coset> entries(n * 2 * ngens, kNoCoset);
    for (std::size_t g = 0; g < ngens; ++g) {
      if (images[g].size() != n) {
        throw Error("generator images have different lengths");
      }
      for (std::size_t c = 0; c < n; ++c) {
        Coset const d                = images[g][c];
        entries[c * 2 * ngens + 2 * g] = d;
        if (d < n) {
          entries[d * 2 * ngens + 2 * g + 1] = static_cast<Coset>(c);
        }
      }
    }
    return CosetTable(ngens, std::move(entries), std::move(subgroup));
  }

  Coset CosetTable::trace(Coset c, Word const& w) const noexcept {
    for (Letter x : w) {
      if (c >= size_ || x.gen >= ngens_) {
        return kNoCoset;
      }
      c = act(c, x);
    }
    return c < size_ ? c : kNoCoset;
  }

  namespace {

    // Renumbers a complete table by BFS from `start` over positive columns.
    // `row(c)` yields the raw row of live coset c; returns the new table
    // entries, or an empty vector if some coset is unreachable.
    template <class Row>
    std::vector<Coset> bfs_relabel(std::size_t ngens,
                                   std::size_t n,
                                   Coset       start,
                                   Row const&  row,
                                   std::size_t raw_bound) {
      std::size_t const  cols = 2 * ngens;
      std::vector<Coset> order;
      std::vector<Coset> label(raw_bound, kNoCoset);
      order.reserve(n);
      label[start] = 0;
      order.push_back(start);
      for (std::size_t i = 0; i < order.size(); ++i) {
        Coset const* r = row(order[i]);
        for (std::size_t g = 0; g < ngens; ++g) {
          Coset const d = r[2 * g];
          if (label[d] == kNoCoset) {
            label[d] = static_cast<Coset>(order.size());
            order.push_back(d);
          }
        }
      }
      if (order.size() != n) {
        return {};
      }
      std::vector<Coset> out(n * cols);
      for (std::size_t i = 0; i < n; ++i) {
        Coset const* r = row(order[i]);
        for (std::size_t col = 0; col < cols; ++col) {
          out[i * cols + col] = label[r[col]];
        }
      }
      return out;
    }

    class Enumerator {
     public:
      Enumerator(Presentation const& p, EnumLimits const& limits)
          : cols_(2 * p.num_generators()), limits_(limits) {
        for (Word const& r : p.relators()) {
          relators_.push_back(columns(r));
        }
      }

      static std::vector<std::size_t> columns(Word const& w) {
        std::vector<std::size_t> out;
        out.reserve(w.size());
        for (Letter x : w) {
          out.push_back(x.column());
        }
        return out;
      }

      EnumerationResult run(std::vector<Word> const& subgroup) {
        new_coset();
        for (Word const& h : subgroup) {
          if (!scan_and_fill(0, columns(h))) {
            return overflow();
          }
        }
        for (Coset a = 0; a < parent_.size(); ++a) {
          for (auto const& r : relators_) {
            if (parent_[a] != a) {
              break;
            }
            if (!scan_and_fill(a, r)) {
              return overflow();
            }
          }
          if (parent_[a] != a) {
            continue;
          }
          for (std::size_t col = 0; col < cols_; ++col) {
            if (at(a, col) == kNoCoset && !define(a, col)) {
              return overflow();
            }
          }
        }
        return finish(subgroup);
      }

     private:
      Coset& at(Coset c, std::size_t col) {
        return table_[c * cols_ + col];
      }

      Coset new_coset() {
        auto const c = static_cast<Coset>(parent_.size());
        parent_.push_back(c);
        table_.resize(table_.size() + cols_, kNoCoset);
        ++live_;
        ++defined_;
        return c;
      }

      bool define(Coset c, std::size_t col) {
        if (live_ >= limits_.max_cosets) {
          reason_ = "live cosets exceeded max_cosets";
          return false;
        }
        if (defined_ >= limits_.max_deductions) {
          reason_ = "coset definitions exceeded max_deductions";
          return false;
        }
        Coset const d = new_coset();
        at(c, col)     = d;
        at(d, col ^ 1) = c;
        return true;
      }

      bool scan_and_fill(Coset a, std::vector<std::size_t> const& w) {
        if (w.empty()) {
          return true;
        }
        Coset       f = a;
        Coset       b = a;
        std::size_t i = 0;
        std::size_t j = w.size();  // one past the last unscanned letter
        for (;;) {
          while (i < j && at(f, w[i]) != kNoCoset) {
            f = at(f, w[i]);
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j > i && at(b, w[j - 1] ^ 1) != kNoCoset) {
            b = at(b, w[j - 1] ^ 1);
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            at(f, w[i])     = b;
            at(b, w[i] ^ 1) = f;
            return true;
          }
          if (!define(f, w[i])) {
            return false;
          }
        }
      }

      Coset rep(Coset c) {
        Coset root = c;
        while (parent_[root] != root) {
          root = parent_[root];
        }
        while (parent_[c] != root) {
          Coset const next = parent_[c];
          parent_[c]       = root;
          c                = next;
        }
        return root;
      }

      void merge(Coset k, Coset l, std::deque<Coset>& queue) {
        Coset const phi = rep(k);
        Coset const psi = rep(l);
        if (phi == psi) {
          return;
        }
        Coset const mu = std::min(phi, psi);
        Coset const nu = std::max(phi, psi);
        parent_[nu]    = mu;
        --live_;
        queue.push_back(nu);
      }

      void coincidence(Coset a, Coset b) {
        std::deque<Coset> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
          Coset const gamma = queue.front();
          queue.pop_front();
          for (std::size_t col = 0; col < cols_; ++col) {
            Coset const delta = at(gamma, col);
            if (delta == kNoCoset) {
              continue;
            }
            at(delta, col ^ 1) = kNoCoset;
            Coset const mu     = rep(gamma);
            Coset const nu     = rep(delta);
            if (at(mu, col) != kNoCoset) {
              merge(nu, at(mu, col), queue);
            } else if (at(nu, col ^ 1) != kNoCoset) {
              merge(mu, at(nu, col ^ 1), queue);
            } else {
              at(mu, col)     = nu;
              at(nu, col ^ 1) = mu;
            }
          }
        }
      }

      EnumerationResult overflow() const {
        return Overflow{limits_.max_cosets, live_, defined_, reason_};
      }

      EnumerationResult finish(std::vector<Word> const& subgroup) {
        std::size_t const ngens = cols_ / 2;
        if (ngens == 0) {
          return CosetTable(0, {}, subgroup);
        }
        auto row = [this](Coset c) { return &table_[c * cols_]; };
        auto out = bfs_relabel(ngens, live_, 0, row, parent_.size());
        if (out.empty()) {
          throw Error("internal: enumerated table is not transitive");
        }
        return CosetTable(ngens, std::move(out), subgroup);
      }

      std::size_t                           cols_;
      EnumLimits                            limits_;
      std::vector<std::vector<std::size_t>> relators_;
      std::vector<Coset>                    table_;
      std::vector<Coset>                    parent_;
      std::size_t                           live_    = 0;
      std::size_t                           defined_ = 0;
      std::string                           reason_;
    };

  }  // namespace

  EnumerationResult todd_coxeter(Presentation const&      p,
                                 std::vector<Word> const& subgroup,
                                 EnumLimits const&        limits) {
    limits.validate();
    for (Word const& h : subgroup) {
      if (h.generator_bound() > p.num_generators()) {
        throw Error("subgroup word uses an undeclared generator");
      }
    }
    Enumerator e(p, limits);
    return e.run(subgroup);
  }

  ValidationReport validate_table(Presentation const&      p,
                                  std::vector<Word> const& subgroup,
                                  CosetTable const&        t) {
    ValidationReport  report;
    auto const&       names = p.generators();
    std::size_t const n     = t.size();
    if (t.num_generators() != p.num_generators()) {
      report.fail("range", "table has " + std::to_string(t.num_generators())
                               + " generators, presentation has "
                               + std::to_string(p.num_generators()));
      return report;
    }
    std::size_t const cols = 2 * t.num_generators();
    for (std::size_t c = 0; c < n && report.ok(); ++c) {
      for (std::size_t col = 0; col < cols; ++col) {
        if (t.entry(static_cast<Coset>(c), col) >= n) {
          Letter const x = Letter::from_column(col);
          report.fail("range", "coset " + std::to_string(c) + " under "
                                   + format_word(Word{x}, names)
                                   + " is undefined or out of range");
          break;
        }
      }
    }

    for (std::size_t g = 0; g < t.num_generators(); ++g) {
      std::vector<int> hits(n, 0);
      bool             ok = true;
      for (std::size_t c = 0; c < n; ++c) {
        Coset const d = t.entry(static_cast<Coset>(c), 2 * g);
        if (d >= n || ++hits[d] > 1) {
          ok = false;
          break;
        }
        if (t.entry(d, 2 * g + 1) != c) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        report.fail("bijection", "generator " + names[g] + " is not a bijection");
      }
    }

    for (Word const& h : subgroup) {
      Coset const end = t.trace(0, h);
      if (end != 0) {
        report.fail("subgroup", "subgroup generator " + format_word(h, names)
                                    + " does not fix coset 0");
      }
    }

    for (Word const& r : p.relators()) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.trace(static_cast<Coset>(c), r) != c) {
          report.fail("relator", "relator " + format_word(r, names)
                                     + " does not fix coset " + std::to_string(c));
          break;
        }
      }
    }

    if (n > 0) {
      std::vector<bool>  seen(n, false);
      std::vector<Coset> stack{0};
      seen[0]            = true;
      std::size_t count  = 1;
      while (!stack.empty()) {
        Coset const c = stack.back();
        stack.pop_back();
        for (std::size_t col = 0; col < cols; ++col) {
          Coset const d = t.entry(c, col);
          if (d < n && !seen[d]) {
            seen[d] = true;
            ++count;
            stack.push_back(d);
          }
        }
      }
      if (count != n) {
        report.fail("transitive", std::to_string(n - count)
                                      + " cosets unreachable from coset 0");
      }
    }
    return report;
  }

  PermRep permutation_rep(CosetTable const& t) {
    PermRep out(t.num_generators(), Permutation(t.size()));
    for (std::size_t g = 0; g < t.num_generators(); ++g) {
      for (std::size_t c = 0; c < t.size(); ++c) {
        out[g][c] = t.entry(static_cast<Coset>(c), 2 * g);
      }
    }
    return out;
  }

  CosetTable from_permutation_action(PermRep const& generators) {
    std::size_t const ngens = generators.size();
    if (ngens == 0) {
      return CosetTable(0, {}, {});
    }
    std::size_t const n    = generators.front().size();
    std::size_t const cols = 2 * ngens;
    std::vector<Coset> raw(n * cols);
    for (std::size_t g = 0; g < ngens; ++g) {
      if (generators[g].size() != n) {
        throw Error("permutations have different degrees");
      }
      std::vector<bool> hit(n, false);
      for (std::size_t c = 0; c < n; ++c) {
        Coset const d = generators[g][c];
        if (d >= n || hit[d]) {
          throw Error("generator " + std::to_string(g) + " is not a permutation");
        }
        hit[d]                     = true;
        raw[c * cols + 2 * g]      = d;
        raw[d * cols + 2 * g + 1]  = static_cast<Coset>(c);
      }
    }
    auto row     = [&](Coset c) { return &raw[c * cols]; };
    auto entries = bfs_relabel(ngens, n, 0, row, n);
    if (entries.empty()) {
      throw Error("permutation action is not transitive");
    }

    // Transversal along the BFS tree, then the non-trivial Schreier generators.
    std::vector<Word> reps(n);
    std::vector<bool> done(n, false);
    done[0] = true;
    std::vector<Coset> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      Coset const c = order[i];
      for (std::size_t g = 0; g < ngens; ++g) {
        Coset const d = entries[c * cols + 2 * g];
        if (!done[d]) {
          done[d] = true;
          reps[d] = reps[c] * Word{gen(static_cast<GenIndex>(g))};
          order.push_back(d);
        }
      }
    }
    std::vector<Word> stabilizer;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t g = 0; g < ngens; ++g) {
        Coset const d = entries[c * cols + 2 * g];
        Word        s = reps[c] * Word{gen(static_cast<GenIndex>(g))} * reps[d].inverse();
        if (!s.empty()) {
          stabilizer.push_back(std::move(s));
        }
      }
    }
    return CosetTable(ngens, std::move(entries), std::move(stabilizer));
  }

  nlohmann::json to_json(CosetTable const& t, Presentation const& p) {
    nlohmann::json action = nlohmann::json::object();
    auto const     perms  = permutation_rep(t);
    for (std::size_t g = 0; g < perms.size(); ++g) {
      action[p.generators()[g]] = perms[g];
    }
    nlohmann::json subgroup = nlohmann::json::array();
    for (Word const& h : t.subgroup()) {
      subgroup.push_back(format_word(h, p.generators()));
    }
    return {{"n", t.size()}, {"action", std::move(action)}, {"subgroup", std::move(subgroup)}};
  }

}  // namespace curvepi
