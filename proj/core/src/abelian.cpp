#include "curvepi/abelian.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

#include <nlohmann/json.hpp>

#include "curvepi/error.hpp"

namespace curvepi {

  IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    for (auto const& r : rows) {
      if (r.size() != cols_) {
        throw Error("ragged matrix literal");
      }
      for (long x : r) {
        data_.emplace_back(x);
      }
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap((*this)(a, j), (*this)(b, j));
    }
  }

  void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) {
      return;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  void IntMatrix::add_row(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(dst, j) += k * (*this)(src, j);
    }
  }

  void IntMatrix::add_col(std::size_t dst, std::size_t src, BigInt const& k) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, dst) += k * (*this)(i, src);
    }
  }

  void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && (*this)(i, j) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw Error("matrix dimension mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }

  namespace {

    class SmithReducer {
     public:
      SmithReducer(IntMatrix const& m, bool track) : a_(m), track_(track) {
        if (track_) {
          u_ = IntMatrix::identity(m.rows());
          v_ = IntMatrix::identity(m.cols());
        }
      }

      SmithForm run() {
        std::size_t const n = std::min(a_.rows(), a_.cols());
        std::size_t       t = 0;
        for (; t < n; ++t) {
          if (!pivot_block(t)) {
            break;
          }
          for (;;) {
            clear_cross(t);
            if (!cross_clear(t)) {
              pivot_cross(t);
              continue;
            }
            // Divisibility repair: fold an offending row into row t.
            auto bad = find_non_multiple(t);
            if (!bad) {
              break;
            }
            row_add(t, *bad, 1);
          }
          if (a_(t, t) < 0) {
            a_.negate_row(t);
            if (track_) {
              u_.negate_row(t);
            }
          }
        }
        return {std::move(a_), std::move(u_), std::move(v_), t};
      }

     private:
      void row_swap(std::size_t x, std::size_t y) {
        a_.swap_rows(x, y);
        if (track_) {
          u_.swap_rows(x, y);
        }
      }
      void col_swap(std::size_t x, std::size_t y) {
        a_.swap_cols(x, y);
        if (track_) {
          v_.swap_cols(x, y);
        }
      }
      void row_add(std::size_t dst, std::size_t src, BigInt const& k) {
        a_.add_row(dst, src, k);
        if (track_) {
          u_.add_row(dst, src, k);
        }
      }
      void col_add(std::size_t dst, std::size_t src, BigInt const& k) {
        a_.add_col(dst, src, k);
        if (track_) {
          v_.add_col(dst, src, k);
        }
      }

      // Moves the smallest nonzero |entry| of the trailing block to (t, t).
      bool pivot_block(std::size_t t) {
        bool        found = false;
        BigInt      best;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < a_.rows(); ++i) {
          for (std::size_t j = t; j < a_.cols(); ++j) {
            if (a_(i, j) != 0 && (!found || abs(a_(i, j)) < best)) {
              found = true;
              best  = abs(a_(i, j));
              bi    = i;
              bj    = j;
            }
          }
        }
        if (found) {
          row_swap(t, bi);
          col_swap(t, bj);
        }
        return found;
      }

      // Smallest nonzero |entry| in row t and column t moves to the pivot.
      void pivot_cross(std::size_t t) {
        BigInt      best = abs(a_(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (a_(i, t) != 0 && (best == 0 || abs(a_(i, t)) < best)) {
            best = abs(a_(i, t));
            bi   = i;
            bj   = t;
          }
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) != 0 && (best == 0 || abs(a_(t, j)) < best)) {
            best = abs(a_(t, j));
            bi   = t;
            bj   = j;
          }
        }
        row_swap(t, bi);
        col_swap(t, bj);
      }

      void clear_cross(std::size_t t) {
        BigInt const p = a_(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (a_(i, t) != 0) {
            row_add(i, t, -(a_(i, t) / p));
          }
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) != 0) {
            col_add(j, t, -(a_(t, j) / p));
          }
        }
      }

      bool cross_clear(std::size_t t) const {
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          if (a_(i, t) != 0) {
            return false;
          }
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
          if (a_(t, j) != 0) {
            return false;
          }
        }
        return true;
      }

      std::optional<std::size_t> find_non_multiple(std::size_t t) const {
        BigInt const& p = a_(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
          for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (a_(i, j) % p != 0) {
              return i;
            }
          }
        }
        return std::nullopt;
      }

      IntMatrix a_;
      IntMatrix u_;
      IntMatrix v_;
      bool      track_;
    };

  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m, bool track_transforms) {
    return SmithReducer(m, track_transforms).run();
  }

  IntMatrix relator_matrix(Presentation const& p) {
    IntMatrix m(p.relators().size(), p.num_generators());
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      for (Letter x : p.relators()[i]) {
        m(i, x.gen) += x.sign;
      }
    }
    return m;
  }

  InvariantFactors::InvariantFactors(std::size_t free_rank, std::vector<BigInt> torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {
    for (std::size_t i = 0; i < torsion_.size(); ++i) {
      if (torsion_[i] < 2) {
        throw Error("torsion coefficients must be at least 2");
      }
      if (i > 0 && torsion_[i] % torsion_[i - 1] != 0) {
        throw Error("torsion coefficients must form a divisor chain");
      }
    }
  }

  InvariantFactors InvariantFactors::from_cyclic_orders(std::vector<BigInt> const& orders) {
    IntMatrix m(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      m(i, i) = orders[i];
    }
    auto const          snf = smith_normal_form(m, false);
    std::size_t         free_rank = orders.size() - snf.rank;
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.D(i, i) > 1) {
        torsion.push_back(snf.D(i, i));
      }
    }
    return InvariantFactors(free_rank, std::move(torsion));
  }

  BigInt InvariantFactors::order() const {
    if (free_rank_ > 0) {
      return 0;
    }
    BigInt n = 1;
    for (auto const& d : torsion_) {
      n *= d;
    }
    return n;
  }

  InvariantFactors direct_sum(InvariantFactors const& a, InvariantFactors const& b) {
    std::vector<BigInt> orders(a.free_rank() + b.free_rank(), BigInt(0));
    orders.insert(orders.end(), a.torsion().begin(), a.torsion().end());
    orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    return InvariantFactors::from_cyclic_orders(orders);
  }

  std::string to_string(InvariantFactors const& f) {
    if (f.trivial()) {
      return "0";
    }
    std::vector<std::string> parts;
    if (f.free_rank() == 1) {
      parts.emplace_back("Z");
    } else if (f.free_rank() > 1) {
      parts.push_back("Z^" + std::to_string(f.free_rank()));
    }
    for (auto const& d : f.torsion()) {
      parts.push_back("Z/" + d.str());
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out += (i == 0 ? "" : " + ") + parts[i];
    }
    return out;
  }

  namespace {
    nlohmann::json big_to_json(BigInt const& x) {
      if (x <= BigInt(std::numeric_limits<std::int64_t>::max())
          && x >= BigInt(std::numeric_limits<std::int64_t>::min())) {
        return x.convert_to<std::int64_t>();
      }
      return x.str();
    }
  }  // namespace

  nlohmann::json to_json(InvariantFactors const& f) {
    nlohmann::json torsion = nlohmann::json::array();
    for (auto const& d : f.torsion()) {
      torsion.push_back(big_to_json(d));
    }
    return {{"free_rank", f.free_rank()}, {"torsion", std::move(torsion)}};
  }

  InvariantFactors invariant_factors_from_json(nlohmann::json const& j) {
    std::vector<BigInt> torsion;
    for (auto const& d : j.at("torsion")) {
      torsion.push_back(d.is_string() ? BigInt(d.get<std::string>()) : BigInt(d.get<std::int64_t>()));
    }
    return InvariantFactors(j.at("free_rank").get<std::size_t>(), std::move(torsion));
  }

  InvariantFactors abelian_invariants(Presentation const& p) {
    auto const          snf = smith_normal_form(relator_matrix(p), false);
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < snf.rank; ++i) {
      if (snf.D(i, i) > 1) {
        torsion.push_back(snf.D(i, i));
      }
    }
    return InvariantFactors(p.num_generators() - snf.rank, std::move(torsion));
  }

  InvariantFactors curve_abelianization(std::vector<unsigned> const& degrees) {
    if (degrees.empty()) {
      throw Error("a curve needs at least one component");
    }
    unsigned tau = 0;
    for (unsigned d : degrees) {
      if (d == 0) {
        throw Error("component degrees must be positive");
      }
      tau = std::gcd(tau, d);
    }
    std::vector<BigInt> torsion;
    if (tau > 1) {
      torsion.emplace_back(tau);
    }
    return InvariantFactors(degrees.size() - 1, std::move(torsion));
  }

  AbelianizationMap::AbelianizationMap(Presentation const& p)
      : ngens_(p.num_generators()), snf_(smith_normal_form(relator_matrix(p), true)) {
    std::vector<BigInt> torsion;
    for (std::size_t i = 0; i < snf_.rank; ++i) {
      if (snf_.D(i, i) > 1) {
        torsion.push_back(snf_.D(i, i));
      }
    }
    invariants_ = InvariantFactors(ngens_ - snf_.rank, std::move(torsion));
  }

  std::vector<BigInt> AbelianizationMap::coordinates(Word const& w) const {
    // v lies in the relation lattice iff (v V)_j is a multiple of d_j for
    // j < rank and vanishes beyond the rank.
    std::vector<BigInt> v(ngens_);
    for (Letter x : w) {
      if (x.gen >= ngens_) {
        throw Error("word uses an undeclared generator");
      }
      v[x.gen] += x.sign;
    }
    std::vector<BigInt> out;
    for (std::size_t j = 0; j < ngens_; ++j) {
      BigInt y = 0;
      for (std::size_t i = 0; i < ngens_; ++i) {
        y += v[i] * snf_.V(i, j);
      }
      if (j < snf_.rank) {
        BigInt const& d = snf_.D(j, j);
        if (d == 1) {
          continue;
        }
        y %= d;
        if (y < 0) {
          y += d;
        }
      }
      out.push_back(std::move(y));
    }
    return out;
  }

  bool AbelianizationMap::is_trivial(Word const& w) const {
    auto const c = coordinates(w);
    return std::all_of(c.begin(), c.end(), [](BigInt const& x) { return x == 0; });
  }

}  // namespace curvepi
