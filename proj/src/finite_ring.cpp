#include "qsr/finite_ring.hpp"

#include <sstream>

#include "qsr/error.hpp"

namespace qsr {
namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

void check_shape(std::size_t order, const Table& t, const char* which) {
  if (t.size() != order) {
    throw Error(Errc::BadTableShape, std::string(which) + " table has " +
                                         std::to_string(t.size()) + " rows, expected " +
                                         std::to_string(order));
  }
  for (std::size_t a = 0; a < order; ++a) {
    if (t[a].size() != order) {
      throw Error(Errc::BadTableShape, std::string(which) + " table row " + std::to_string(a) +
                                           " has " + std::to_string(t[a].size()) +
                                           " entries, expected " + std::to_string(order));
    }
    for (std::size_t b = 0; b < order; ++b) {
      if (t[a][b] >= order) {
        throw Error(Errc::BadTableShape, std::string(which) + "[" + std::to_string(a) + "][" +
                                             std::to_string(b) + "] = " +
                                             std::to_string(t[a][b]) + " is out of range");
      }
    }
  }
}

}  // namespace

std::string FiniteRing::label(Element a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

Table FiniteRing::add_table() const {
  Table t(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = add_[a * order_ + b];
  return t;
}

Table FiniteRing::mul_table() const {
  Table t(order_, std::vector<Element>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) t[a][b] = mul_[a * order_ + b];
  return t;
}

FiniteRing validate_ring(std::size_t order, const Table& add, const Table& mul, std::string name,
                         std::vector<std::string> labels) {
  if (order == 0) throw Error(Errc::BadTableShape, "order must be positive");
  if (order > kValidationOrderCap) {
    throw Error(Errc::OrderCapExceeded, "order " + std::to_string(order) + " exceeds " +
                                            std::to_string(kValidationOrderCap));
  }
  check_shape(order, add, "add");
  check_shape(order, mul, "mul");
  if (!labels.empty() && labels.size() != order) {
    throw Error(Errc::BadTableShape, "labels has " + std::to_string(labels.size()) +
                                         " entries, expected " + std::to_string(order));
  }

  const std::size_t n = order;
  for (std::size_t i = 0; i < n; ++i) {
    if (add[0][i] != i) {
      throw Error(Errc::NotAbelianGroup,
                  "index 0 is not the additive identity: 0 + " + std::to_string(i) + " = " +
                      std::to_string(add[0][i]));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) {
        throw Error(Errc::NotAbelianGroup, "addition not commutative at (" + std::to_string(a) +
                                               ", " + std::to_string(b) + ")");
      }

  std::vector<Element> neg(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (add[a][b] == 0) {
        neg[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) {
      throw Error(Errc::NotAbelianGroup, "element " + std::to_string(a) + " has no negative");
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]]) {
          throw Error(Errc::NotAbelianGroup, "addition not associative at " + triple(a, b, c));
        }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) {
          throw Error(Errc::NotDistributive,
                      "a*(b+c) != a*b + a*c at (a, b, c) = " + triple(a, b, c));
        }
        if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]) {
          throw Error(Errc::NotDistributive,
                      "(a+b)*c != a*c + b*c at (a, b, c) = " + triple(a, b, c));
        }
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
          throw Error(Errc::NotAssociative,
                      "(a*b)*c != a*(b*c) at (a, b, c) = " + triple(a, b, c));
        }

  FiniteRing r;
  r.name_ = std::move(name);
  r.order_ = n;
  r.add_.resize(n * n);
  r.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      r.add_[a * n + b] = add[a][b];
      r.mul_[a * n + b] = mul[a][b];
    }
  r.neg_ = std::move(neg);
  r.labels_ = std::move(labels);

  for (std::size_t u = 0; u < n && !r.unity_; ++u) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = mul[u][a] == a && mul[a][u] == a;
    if (ok) r.unity_ = static_cast<Element>(u);
  }
  return r;
}

}  // namespace qsr
