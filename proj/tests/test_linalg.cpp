#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "modlab/errors.hpp"
#include "modlab/exec.hpp"
#include "modlab/mat.hpp"
#include "modlab/subspace.hpp"

using namespace modlab;

namespace {

// Brute-force span of the rows of m: every linear combination, as a set.
std::set<std::vector<uint8_t>> span_set(const Mat& m) {
  int p = m.field().modulus();
  uint64_t total = 1;
  for (int i = 0; i < m.rows(); ++i) total *= p;
  std::set<std::vector<uint8_t>> out;
  for (uint64_t k = 0; k < total; ++k)
    out.insert(m.apply_row(coeffs_from_index(k, m.rows(), p)));
  return out;
}

// All rows x cols matrices over GF(p), enumerated by entry tuple.
std::vector<Mat> all_matrices(int p, int rows, int cols) {
  PrimeField f(p);
  uint64_t total = 1;
  for (int i = 0; i < rows * cols; ++i) total *= p;
  std::vector<Mat> out;
  out.reserve(total);
  for (uint64_t k = 0; k < total; ++k)
    out.emplace_back(f, rows, cols, coeffs_from_index(k, rows * cols, p));
  return out;
}

std::vector<std::vector<uint8_t>> all_vectors(int p, int n) {
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  std::vector<std::vector<uint8_t>> out;
  for (uint64_t k = 0; k < total; ++k)
    out.push_back(coeffs_from_index(k, n, p));
  return out;
}

std::vector<uint8_t> mat_vec(const Mat& m, const std::vector<uint8_t>& x) {
  // m * x for a column vector x.
  std::vector<uint8_t> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    int acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    out[i] = uint8_t(acc % m.field().modulus());
  }
  return out;
}

}  // namespace

TEST_CASE("prime field accepts exactly the primes up to 97") {
  std::set<int> primes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (int p = -1; p <= 101; ++p) {
    if (primes.count(p)) {
      CHECK(PrimeField(p).modulus() == p);
    } else {
      CHECK_THROWS_AS(PrimeField{p}, SpecError);
    }
  }
}

TEST_CASE("field arithmetic satisfies the field axioms exhaustively") {
  for (int p : {2, 3, 5, 7}) {
    PrimeField f(p);
    for (int a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == (a + b) % p);
        CHECK(f.mul(a, b) == (a * b) % p);
        CHECK(f.sub(a, b) == ((a - b) % p + p) % p);
      }
    }
    CHECK_THROWS_AS(f.inv(0), SpecError);
  }
  // Largest field: inverses still correct.
  PrimeField f97(97);
  for (int a = 1; a < 97; ++a) CHECK(f97.mul(a, f97.inv(a)) == 1);
}

TEST_CASE("coefficient tuples come out in lexicographic order") {
  CHECK(coeffs_from_index(0, 3, 3) == std::vector<uint8_t>{0, 0, 0});
  CHECK(coeffs_from_index(1, 3, 3) == std::vector<uint8_t>{0, 0, 1});
  CHECK(coeffs_from_index(3, 3, 3) == std::vector<uint8_t>{0, 1, 0});
  CHECK(coeffs_from_index(26, 3, 3) == std::vector<uint8_t>{2, 2, 2});
  std::vector<uint8_t> prev;
  for (uint64_t k = 0; k < 27; ++k) {
    auto cur = coeffs_from_index(k, 3, 3);
    if (k > 0) CHECK(prev < cur);
    prev = cur;
  }
}

TEST_CASE("matrix product is associative and distributive, exhaustively") {
  auto ms = all_matrices(2, 2, 2);
  for (const auto& a : ms)
    for (const auto& b : ms) {
      CHECK((a + b) == (b + a));
      for (const auto& c : ms) {
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
      }
    }
}

TEST_CASE("rref is canonical: equal iff row spaces are equal as sets") {
  auto ms = all_matrices(2, 2, 3);
  std::vector<std::set<std::vector<uint8_t>>> spans;
  std::vector<Mat> reduced;
  for (const auto& m : ms) {
    spans.push_back(span_set(m));
    auto r = rref(m);
    reduced.push_back(r.reduced);
    // Reduction preserves the row space.
    CHECK(span_set(r.reduced) == spans.back());
    // Idempotent.
    CHECK(rref(r.reduced).reduced == r.reduced);
    // Pivot columns strictly increase and pivots are leading ones.
    for (size_t i = 0; i + 1 < r.pivot_cols.size(); ++i)
      CHECK(r.pivot_cols[i] < r.pivot_cols[i + 1]);
    for (int i = 0; i < r.rank; ++i)
      CHECK(r.reduced(i, r.pivot_cols[i]) == 1);
  }
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = 0; j < ms.size(); ++j)
      CHECK((reduced[i] == reduced[j]) == (spans[i] == spans[j]));
}

TEST_CASE("kernel matches the brute-force null set") {
  for (int p : {2, 3}) {
    for (const auto& m : all_matrices(p, 2, 3)) {
      std::set<std::vector<uint8_t>> null_set;
      for (const auto& x : all_vectors(p, 3)) {
        auto y = mat_vec(m, x);
        if (std::all_of(y.begin(), y.end(), [](uint8_t v) { return !v; }))
          null_set.insert(x);
      }
      Subspace k = kernel(m);
      auto got = enumerate_vectors(k, 1 << 20);
      CHECK(got.size() == null_set.size());
      for (const auto& v : got) CHECK(null_set.count(v) == 1);
    }
  }
}

TEST_CASE("left kernel annihilates from the left") {
  PrimeField f(3);
  Mat m = Mat::from_rows(f, {{1, 2, 0}, {2, 1, 0}, {0, 0, 0}, {1, 0, 1}});
  Subspace lk = left_kernel(m);
  // Brute-force count.
  int expect = 0;
  for (const auto& v : all_vectors(3, 4)) {
    auto w = m.apply_row(v);
    if (std::all_of(w.begin(), w.end(), [](uint8_t x) { return !x; })) {
      ++expect;
      CHECK(lk.contains(v));
    }
  }
  CHECK((1 << lk.dim()) >= 0);  // silence unused warnings on some builds
  int got = 1;
  for (int i = 0; i < lk.dim(); ++i) got *= 3;
  CHECK(got == expect);
}

TEST_CASE("solve_right agrees with brute-force solvability") {
  // All 2x2 systems A X = B with X a 2x1 column over GF(2).
  auto as = all_matrices(2, 2, 2);
  auto bs = all_matrices(2, 2, 1);
  for (const auto& a : as)
    for (const auto& b : bs) {
      bool any = false;
      for (const auto& x : all_matrices(2, 2, 1))
        if (a * x == b) any = true;
      auto got = solve_right(a, b);
      CHECK(got.has_value() == any);
      if (got) CHECK((a * *got) == b);
    }
}

TEST_CASE("solve_left solves X A = B") {
  PrimeField f(5);
  Mat a = Mat::from_rows(f, {{1, 2}, {3, 4}});
  Mat b = Mat::from_rows(f, {{2, 1}, {0, 3}, {1, 1}});
  auto x = solve_left(a, b);
  REQUIRE(x.has_value());
  CHECK((*x * a) == b);
  CHECK(x->rows() == 3);
  CHECK(x->cols() == 2);
}

TEST_CASE("inverse exists exactly for full-rank squares") {
  for (const auto& m : all_matrices(3, 2, 2)) {
    bool brute = false;
    for (const auto& x : all_matrices(3, 2, 2))
      if ((m * x).is_identity() && (x * m).is_identity()) brute = true;
    auto inv = inverse(m);
    CHECK(inv.has_value() == brute);
    CHECK(is_invertible(m) == brute);
    if (inv) {
      CHECK((m * *inv).is_identity());
      CHECK((*inv * m).is_identity());
    }
  }
}

TEST_CASE("subspace representation equality is set equality") {
  auto ms = all_matrices(2, 2, 3);
  std::vector<Subspace> subs;
  std::vector<std::set<std::vector<uint8_t>>> sets;
  for (const auto& m : ms) {
    subs.push_back(Subspace::from_rows(m));
    sets.push_back(span_set(m));
  }
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j)
      CHECK((subs[i] == subs[j]) == (sets[i] == sets[j]));
}

TEST_CASE("containment, reduction and coordinates agree with the span") {
  for (int p : {2, 3}) {
    for (const auto& m : all_matrices(p, 2, 3)) {
      Subspace s = Subspace::from_rows(m);
      auto set = span_set(m);
      for (const auto& v : all_vectors(p, 3)) {
        CHECK(s.contains(v) == (set.count(v) == 1));
        if (set.count(v)) {
          auto c = s.coords(v);
          CHECK(s.basis().apply_row(c) == v);
        } else {
          CHECK_THROWS_AS(s.coords(v), SpecError);
        }
      }
    }
  }
}

TEST_CASE("sum and intersection match elementwise definitions") {
  auto ms = all_matrices(2, 2, 4);
  // Sample pairs on a stride so the quadratic loop stays quick.
  for (size_t i = 0; i < ms.size(); i += 7) {
    for (size_t j = 0; j < ms.size(); j += 11) {
      Subspace u = Subspace::from_rows(ms[i]);
      Subspace v = Subspace::from_rows(ms[j]);
      Subspace s = sum(u, v);
      Subspace x = intersect(u, v);
      for (const auto& w : all_vectors(2, 4)) {
        CHECK(x.contains(w) == (u.contains(w) && v.contains(w)));
        if (u.contains(w) || v.contains(w)) CHECK(s.contains(w));
      }
      // Modular dimension identity.
      CHECK(s.dim() + x.dim() == u.dim() + v.dim());
      CHECK(is_subset(u, s));
      CHECK(is_subset(v, s));
      CHECK(is_subset(x, u));
      CHECK(is_subset(x, v));
      CHECK(is_subset(u, v) == (sum(u, v) == v));
    }
  }
}

TEST_CASE("vector enumeration is complete, ordered and capped") {
  PrimeField f(3);
  Mat m = Mat::from_rows(f, {{1, 0, 2}, {0, 1, 1}});
  Subspace s = Subspace::from_rows(m);
  auto vecs = enumerate_vectors(s, 100);
  CHECK(vecs.size() == 9);
  std::set<std::vector<uint8_t>> distinct(vecs.begin(), vecs.end());
  CHECK(distinct.size() == 9);
  CHECK(distinct == span_set(m));
  CHECK(vecs[0] == std::vector<uint8_t>{0, 0, 0});
  for (const auto& v : vecs) CHECK(s.contains(v));
  CHECK_THROWS_AS(enumerate_vectors(s, 8), CapExceeded);
  // Full space of dimension 40 over GF(2) overflows any cap without crashing.
  Subspace big = Subspace::full(PrimeField(2), 40);
  CHECK_THROWS_AS(enumerate_vectors(big, uint64_t(1) << 22), CapExceeded);
}

TEST_CASE("zero-dimension edge cases hold up") {
  PrimeField f(2);
  Mat empty(f, 0, 3);
  CHECK(rref(empty).rank == 0);
  CHECK(kernel(empty).dim() == 3);  // no constraints
  Subspace z(f, 3);
  CHECK(z.dim() == 0);
  CHECK(z.contains({0, 0, 0}));
  CHECK(!z.contains({1, 0, 0}));
  CHECK(enumerate_vectors(z, 10).size() == 1);
  Mat empty_cols(f, 2, 0);
  CHECK(rref(empty_cols).rank == 0);
  Subspace z0(f, 0);
  CHECK(z0.is_full());
  CHECK(enumerate_vectors(z0, 10).size() == 1);
}

TEST_CASE("sweep kernels give identical answers under both policies") {
  // Predicate on indices with some failures sprinkled in.
  auto fn = [](uint64_t i) {
    bool counted = (i % 3) != 1;
    bool failed = counted && (i % 1000 == 617 || i == 4999);
    return std::pair<bool, bool>(counted, failed);
  };
  exec::SweepOutcome serial, parallel;
  {
    exec::PolicyGuard g(exec::Policy::serial);
    serial = exec::sweep(5000, fn);
  }
  {
    exec::PolicyGuard g(exec::Policy::parallel);
    parallel = exec::sweep(5000, fn);
  }
  CHECK(serial.counted == parallel.counted);
  CHECK(serial.first_fail == parallel.first_fail);
  CHECK(serial.first_fail == 617);

  for (auto pol : {exec::Policy::serial, exec::Policy::parallel}) {
    exec::PolicyGuard g(pol);
    auto hit = exec::find_first(100, [](uint64_t i) { return i >= 42; });
    REQUIRE(hit.has_value());
    CHECK(*hit == 42);
    CHECK(!exec::find_first(100, [](uint64_t) { return false; }).has_value());
    std::vector<uint64_t> slots(64, 0);
    exec::for_each_index(64, [&](uint64_t i) { slots[i] = i * i; });
    for (uint64_t i = 0; i < 64; ++i) CHECK(slots[i] == i * i);
  }
}
