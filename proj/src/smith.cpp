#include "evb/smith.hpp"

#include <algorithm>
#include <utility>

namespace evb {

namespace {

// Tracks P·a·Q = work together with P⁻¹ and Q⁻¹.
class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : work_(a),
        P_(IntegerMatrix::identity(a.rows())),
        P_inv_(IntegerMatrix::identity(a.rows())),
        Q_(IntegerMatrix::identity(a.cols())),
        Q_inv_(IntegerMatrix::identity(a.cols())) {}

  SmithForm run() {
    const std::size_t steps = std::min(work_.rows(), work_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_at(t)) break;
      if (work_(t, t) < 0) negate_row(t);
    }
    return {std::move(P_inv_), std::move(work_), std::move(Q_inv_), std::move(P_), std::move(Q_)};
  }

 private:
  // Returns false when the trailing block is entirely zero.
  bool reduce_at(std::size_t t) {
    for (;;) {
      if (!move_smallest_to(t)) return false;
      bool clean = true;
      for (std::size_t i = t + 1; i < work_.rows(); ++i) {
        if (work_(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), work_(i, t).get_mpz_t(), work_(t, t).get_mpz_t());
        add_row_multiple(i, t, -q);
        if (work_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < work_.cols(); ++j) {
        if (work_(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), work_(t, j).get_mpz_t(), work_(t, t).get_mpz_t());
        add_col_multiple(j, t, -q);
        if (work_(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: pull any offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < work_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < work_.cols(); ++j)
          if (!mpz_divisible_p(work_(i, j).get_mpz_t(), work_(t, t).get_mpz_t())) {
            add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) return true;
    }
  }

  bool move_smallest_to(std::size_t t) {
    bool found = false;
    std::size_t best_r = t, best_c = t;
    Integer best;
    for (std::size_t i = t; i < work_.rows(); ++i)
      for (std::size_t j = t; j < work_.cols(); ++j) {
        if (work_(i, j) == 0) continue;
        Integer m = abs(work_(i, j));
        if (!found || m < best) {
          found = true;
          best = m;
          best_r = i;
          best_c = j;
        }
      }
    if (!found) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    work_.swap_rows(a, b);
    P_.swap_rows(a, b);
    P_inv_.swap_cols(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    work_.swap_cols(a, b);
    Q_.swap_cols(a, b);
    Q_inv_.swap_rows(a, b);
  }

  void negate_row(std::size_t r) {
    for (auto& x : work_.row(r)) x = -x;
    for (auto& x : P_.row(r)) x = -x;
    for (std::size_t i = 0; i < P_inv_.rows(); ++i) P_inv_(i, r) = -P_inv_(i, r);
  }

  // row_dst += k · row_src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t c = 0; c < work_.cols(); ++c) work_(dst, c) += k * work_(src, c);
    for (std::size_t c = 0; c < P_.cols(); ++c) P_(dst, c) += k * P_(src, c);
    for (std::size_t r = 0; r < P_inv_.rows(); ++r) P_inv_(r, src) -= k * P_inv_(r, dst);
  }

  // col_dst += k · col_src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    for (std::size_t r = 0; r < work_.rows(); ++r) work_(r, dst) += k * work_(r, src);
    for (std::size_t r = 0; r < Q_.rows(); ++r) Q_(r, dst) += k * Q_(r, src);
    for (std::size_t c = 0; c < Q_inv_.cols(); ++c) Q_inv_(src, c) -= k * Q_inv_(dst, c);
  }

  IntegerMatrix work_;
  IntegerMatrix P_, P_inv_, Q_, Q_inv_;
};

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::vector<Integer> SmithForm::elementary_divisors() const {
  std::vector<Integer> d;
  for (auto& x : diagonal())
    if (x != 0) d.push_back(x);
  return d;
}

SmithForm smith_normal_form(const IntegerMatrix& a) { return SmithReducer(a).run(); }

}  // namespace evb
