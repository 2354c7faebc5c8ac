#include "curvepi/projective_group.hpp"

#include <algorithm>
#include <deque>

#include "curvepi/error.hpp"

namespace curvepi {

  ProjectiveLinearGroup::ProjectiveLinearGroup(unsigned p) : p_(p) {
    if (p < 2 || p > 101) {
      throw Error("prime out of range");
    }
    for (unsigned q = 2; q * q <= p; ++q) {
      if (p % q == 0) {
        throw Error("modulus must be prime");
      }
    }
    for (unsigned a = 0; a < p; ++a) {
      for (unsigned b = 0; b < p; ++b) {
        for (unsigned c = 0; c < p; ++c) {
          for (unsigned d = 0; d < p; ++d) {
            if ((a * d + p * p - b * c) % p == 1 % p) {
              elements_.push_back(normalize({a, b, c, d}));
            }
          }
        }
      }
    }
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    identity_ = index_of(normalize({1, 0, 0, 1}));
  }

  // Representative with first non-zero entry at most (p - 1) / 2.
  ProjectiveLinearGroup::Matrix ProjectiveLinearGroup::normalize(Matrix m) const {
    for (unsigned v : m) {
      if (v != 0) {
        if (2 * v > p_) {
          for (unsigned& e : m) {
            e = (p_ - e) % p_;
          }
        }
        break;
      }
    }
    return m;
  }

  std::size_t ProjectiveLinearGroup::index_of(Matrix const& m) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), m);
    if (it == elements_.end() || *it != m) {
      throw Error("matrix is not in the group");
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  std::size_t ProjectiveLinearGroup::multiply(std::size_t x, std::size_t y) const {
    Matrix const& a = element(x);
    Matrix const& b = element(y);
    Matrix        m{(a[0] * b[0] + a[1] * b[2]) % p_, (a[0] * b[1] + a[1] * b[3]) % p_,
               (a[2] * b[0] + a[3] * b[2]) % p_, (a[2] * b[1] + a[3] * b[3]) % p_};
    return index_of(normalize(m));
  }

  std::size_t ProjectiveLinearGroup::element_order(std::size_t x) const {
    std::size_t n = 1;
    for (std::size_t y = x; y != identity_; y = multiply(y, x)) {
      ++n;
    }
    return n;
  }

  std::size_t ProjectiveLinearGroup::generated_order(std::vector<std::size_t> const& gens) const {
    std::vector<bool>       seen(order(), false);
    std::deque<std::size_t> queue{identity_};
    seen[identity_] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
      std::size_t const e = queue.front();
      queue.pop_front();
      for (std::size_t g : gens) {
        std::size_t const f = multiply(e, g);
        if (!seen[f]) {
          seen[f] = true;
          ++count;
          queue.push_back(f);
        }
      }
    }
    return count;
  }

  Permutation ProjectiveLinearGroup::right_action(std::size_t g) const {
    Permutation out(order());
    for (std::size_t i = 0; i < order(); ++i) {
      out[i] = static_cast<Coset>(multiply(i, g));
    }
    return out;
  }

  std::optional<GeneratingPair> find_237_pair(ProjectiveLinearGroup const& g) {
    std::vector<std::size_t> involutions;
    std::vector<std::size_t> triples;
    for (std::size_t i = 0; i < g.order(); ++i) {
      std::size_t const o = g.element_order(i);
      if (o == 2) {
        involutions.push_back(i);
      } else if (o == 3) {
        triples.push_back(i);
      }
    }
    for (std::size_t x : involutions) {
      for (std::size_t y : triples) {
        if (g.element_order(g.multiply(x, y)) == 7 && g.generated_order({x, y}) == g.order()) {
          return GeneratingPair{x, y};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace curvepi
