#include "muntz/partition.hpp"

#include "muntz/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace muntz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0)
      fail(ErrorCode::NotAPartition, "negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail(ErrorCode::NotAPartition, "partition parts must be non-increasing");
  }
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
}

int Partition::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
  std::vector<int> v = parts_;
  v.resize(std::max<std::size_t>(v.size(), n), 0);
  return v;
}

bool Partition::contains(const Partition& mu) const noexcept {
  if (mu.length() > length())
    return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > (*this)[i])
      return false;
  return true;
}

Partition make_partition(const std::vector<int>& parts) { return Partition(parts); }

std::string to_string(const Partition& p) {
  std::string s = "(";
  const auto& v = p.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i])
      ++j;
    if (i > 0)
      s += ',';
    s += std::to_string(v[i]);
    if (j - i > 1)
      s += '^' + std::to_string(j - i);
    i = j;
  }
  return s + ")";
}

Partition conjugate(const Partition& p) {
  std::vector<int> c(p.empty() ? 0 : p[1], 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j)
      ++c[j];
  return Partition(std::move(c));
}

HookContent hook_and_content(const Partition& p, int i, int j) {
  if (i < 1 || j < 1 || j > p[i])
    fail(ErrorCode::BoxOutsideDiagram,
         "box (" + std::to_string(i) + "," + std::to_string(j) + ") is not in " + to_string(p));
  Partition c = conjugate(p);
  return {p[i] + c[j] - i - j + 1, j - i};
}

BigInt ssyt_count(const Partition& p, int n) {
  if (p.length() > n)
    return 0;
  Partition c = conjugate(p);
  BigInt num = 1, den = 1;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p[i]; ++j) {
      num *= n + j - i;
      den *= p[i] + c[j] - i - j + 1;
    }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational hook_ratio_first_row(const Partition& p, int n) {
  if (p.empty())
    fail(ErrorCode::EmptyPartition, "hook ratio needs a non-empty partition");
  Partition c = conjugate(p);
  BigInt num = 1, den = 1;
  for (int j = 1; j <= p[1]; ++j) {
    num *= n + 1 + (j - 1);
    den *= p[1] + c[j] - j;
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Partition bottom_partition(const Partition& p) {
  if (p.empty())
    return {};
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

namespace {

void require_order(const Partition& p, int n) {
  if (n < 1)
    fail(ErrorCode::InvalidInput, "order n must be positive");
  if (p.length() > n)
    fail(ErrorCode::LengthExceedsOrder,
         "partition " + to_string(p) + " has more than " + std::to_string(n) + " parts");
}

} // namespace

std::vector<Partition> muntz_tableau(const Partition& p, int n) {
  require_order(p, n);
  std::vector<int> v = p.padded(n);
  std::vector<Partition> out;
  out.reserve(n + 1);
  out.push_back(bottom_partition(p));
  for (int i = 1; i <= n; ++i) {
    std::vector<int> parts;
    for (int j = 0; j < i; ++j)
      parts.push_back(v[j] + 1);
    for (int j = i + 1; j < n; ++j)
      parts.push_back(v[j]);
    out.emplace_back(std::move(parts));
  }
  return out;
}

std::vector<int> partition_to_exponents(const Partition& p, int n) {
  require_order(p, n);
  std::vector<int> s(n);
  for (int i = 1; i <= n; ++i)
    s[i - 1] = p[1] - p[i + 1] + i;
  return s;
}

Partition exponents_to_partition(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  for (int i = 0; i < n; ++i)
    if (s[i] < 1 || (i > 0 && s[i] <= s[i - 1]))
      fail(ErrorCode::NotRealizable, "exponents must be positive and strictly increasing");
  if (n == 0)
    return {};
  std::vector<int> parts(n);
  parts[0] = s[n - 1] - n;
  for (int i = 1; i < n; ++i)
    parts[i] = parts[0] + i - s[i - 1];
  for (int i = 0; i < n; ++i)
    if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
      fail(ErrorCode::NotRealizable, "exponents do not come from a partition");
  return Partition(std::move(parts));
}

Partition border_complement(const Partition& p) {
  std::vector<int> v = p.parts();
  for (int& x : v)
    --x;
  return Partition(std::move(v));
}

std::vector<std::pair<Partition, int>> descent_chain(const Partition& p, int n) {
  require_order(p, n);
  std::vector<std::pair<Partition, int>> chain{{p, n}};
  while (!chain.back().first.empty())
    chain.emplace_back(border_complement(chain.back().first), chain.back().second + 1);
  return chain;
}

bool is_dimension_elevation(const Partition& lambda, int n, const Partition& mu) {
  if (n < 1 || lambda.length() > n || mu.length() > n + 1)
    return false;
  auto small = partition_to_exponents(lambda, n);
  auto big = partition_to_exponents(mu, n + 1);
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Partition> dimension_elevation_partitions(const Partition& p, int n, int r_max) {
  require_order(p, n);
  std::vector<int> v = p.padded(n + 1);
  std::set<Partition> found;
  auto keep = [&](std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
        return;
    Partition mu(std::move(parts));
    if (is_dimension_elevation(p, n, mu))
      found.insert(std::move(mu));
  };
  // a new largest exponent: every part raised by r, plus a row of r
  for (int r = 0; r <= r_max; ++r) {
    std::vector<int> parts;
    for (int i = 0; i < n; ++i)
      parts.push_back(v[i] + r);
    parts.push_back(r);
    keep(std::move(parts));
  }
  // a new exponent below s_n: decrement the first s rows, insert a row rho
  for (int s = 1; s <= n; ++s) {
    for (int rho = v[s]; rho <= v[s - 1] - 1; ++rho) {
      std::vector<int> parts;
      for (int i = 0; i < s; ++i)
        parts.push_back(v[i] - 1);
      parts.push_back(rho);
      for (int i = s; i < n; ++i)
        parts.push_back(v[i]);
      keep(std::move(parts));
    }
  }
  return {found.begin(), found.end()};
}

FrobeniusForm to_frobenius(const Partition& p) {
  Partition c = conjugate(p);
  FrobeniusForm f;
  for (int i = 1; p[i] >= i && i <= p.length(); ++i) {
    f.arms.push_back(p[i] - i);
    f.legs.push_back(c[i] - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusForm& f) {
  const std::size_t r = f.arms.size();
  auto strictly_decreasing = [](const std::vector<int>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] < 0 || (i > 0 && x[i] >= x[i - 1]))
        return false;
    return true;
  };
  if (f.legs.size() != r || !strictly_decreasing(f.arms) || !strictly_decreasing(f.legs))
    fail(ErrorCode::NotAPartition, "invalid Frobenius form");
  if (r == 0)
    return {};
  // rows 1..r come from the arms; rows below the diagonal block from the legs
  std::vector<int> parts;
  for (std::size_t i = 0; i < r; ++i)
    parts.push_back(f.arms[i] + static_cast<int>(i) + 1);
  const int rows = f.legs[0] + 1;
  for (int i = static_cast<int>(r) + 1; i <= rows; ++i) {
    int count = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (f.legs[j] + static_cast<int>(j) + 1 >= i)
        ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

std::vector<Tableau> enumerate_ssyt(const Partition& p, int n, std::size_t bound) {
  BigInt count = ssyt_count(p, n);
  if (count > BigInt(static_cast<unsigned long>(bound)))
    fail(ErrorCode::EnumerationTooLarge,
         "shape " + to_string(p) + " has " + count.get_str() + " tableaux");
  std::vector<Tableau> out;
  if (count == 0)
    return out;
  Tableau t(p.length());
  for (int i = 0; i < p.length(); ++i)
    t[i].assign(p[i + 1], 0);
  std::vector<std::pair<int, int>> boxes;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i + 1]; ++j)
      boxes.emplace_back(i, j);

  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == boxes.size()) {
      out.push_back(t);
      return;
    }
    auto [i, j] = boxes[idx];
    int lo = 1;
    if (j > 0)
      lo = std::max(lo, t[i][j - 1]);
    if (i > 0)
      lo = std::max(lo, t[i - 1][j] + 1);
    for (int x = lo; x <= n; ++x) {
      t[i][j] = x;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<Partition> partitions_of(int weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(remaining, max_part); x >= 1; --x) {
      cur.push_back(x);
      self(self, remaining - x, x);
      cur.pop_back();
    }
  };
  rec(rec, weight, weight);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_length) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w)
    for (auto& p : partitions_of(w))
      if (p.length() <= max_length)
        out.push_back(std::move(p));
  return out;
}

} // namespace muntz
