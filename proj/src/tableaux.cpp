#include "dsort/tableaux.hpp"

#include <algorithm>

#include "dsort/errors.hpp"

namespace dsort {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InvalidPartition("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InvalidPartition("partition parts must be weakly decreasing");
    }
    n_ += parts_[i];
  }
}

bool Partition::contains(std::size_t row, std::size_t col) const {
  return row >= 1 && row <= parts_.size() && col >= 1 && col <= parts_[row - 1];
}

std::string to_string(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda) {
  std::vector<std::size_t> cols(lambda.first_row(), 0);
  for (std::size_t part : lambda.parts()) {
    for (std::size_t j = 0; j < part; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

PartitionWalker::PartitionWalker(std::size_t n) : parts_(std::max<std::size_t>(n, 1)) {
  if (n > 0) {
    parts_[0] = n;
    len_ = 1;
  }
}

void PartitionWalker::advance() {
  if (done_) return;
  // Rightmost part larger than one; everything after it is a run of ones.
  std::size_t k = len_;
  while (k > 0 && parts_[k - 1] == 1) --k;
  if (k == 0) {
    done_ = true;
    return;
  }
  --k;
  std::size_t rest = (len_ - k - 1) + 1;
  const std::size_t v = --parts_[k];
  len_ = k + 1;
  while (rest > 0) {
    const std::size_t take = std::min(v, rest);
    parts_[len_++] = take;
    rest -= take;
  }
}

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  for (PartitionWalker w(n); !w.done(); w.advance()) {
    out.emplace_back(std::vector<std::size_t>(w.parts().begin(), w.parts().end()));
  }
  return out;
}

BigInt partition_count(std::size_t n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const std::size_t g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      BigInt term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (plus) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    p[m] = acc;
  }
  return p[n];
}

std::size_t hook_length(const Partition& lambda, std::size_t row, std::size_t col) {
  if (!lambda.contains(row, col)) {
    throw BoxOutsideShape("box (" + std::to_string(row) + "," + std::to_string(col) +
                          ") is outside shape " + to_string(lambda));
  }
  const std::size_t arm = lambda.parts()[row - 1] - col;
  std::size_t leg = 0;
  for (std::size_t r = row; r < lambda.length() && lambda.parts()[r] >= col; ++r) ++leg;
  return arm + leg + 1;
}

BigInt syt_count(const Partition& lambda) {
  BigInt hooks = 1;
  for (std::size_t r = 1; r <= lambda.length(); ++r) {
    for (std::size_t c = 1; c <= lambda.parts()[r - 1]; ++c) {
      hooks *= static_cast<unsigned long>(hook_length(lambda, r, c));
    }
  }
  BigInt out;
  mpz_divexact(out.get_mpz_t(), factorial(lambda.size()).get_mpz_t(), hooks.get_mpz_t());
  return out;
}

Partition StandardTableau::shape() const {
  std::vector<std::size_t> lens;
  lens.reserve(rows.size());
  for (const auto& row : rows) lens.push_back(row.size());
  return Partition(std::move(lens));
}

bool StandardTableau::is_standard() const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return false;
    if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
    n += rows[r].size();
  }
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      const std::size_t v = rows[r][c];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (c > 0 && rows[r][c - 1] >= v) return false;
      if (r > 0 && rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

std::vector<StandardTableau> syt_enumerate(const Partition& lambda, std::size_t bound) {
  const std::size_t n = lambda.size();
  if (n > bound) {
    throw SizeLimitExceeded("syt_enumerate: n=" + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  }
  std::vector<StandardTableau> out;
  StandardTableau current;
  current.rows.assign(lambda.length(), {});
  const auto& target = lambda.parts();

  // Place 1..n in order; value k may go at the end of any row that still has
  // room and stays no longer than the row above.
  auto place = [&](auto& self, std::size_t k) -> void {
    if (k > n) {
      out.push_back(current);
      return;
    }
    for (std::size_t r = 0; r < target.size(); ++r) {
      auto& row = current.rows[r];
      if (row.size() == target[r]) continue;
      if (r > 0 && current.rows[r - 1].size() <= row.size()) continue;
      row.push_back(k);
      self(self, k + 1);
      row.pop_back();
    }
  };
  place(place, 1);
  return out;
}

RskResult rsk_shape(const Permutation& p) {
  RskResult out;
  auto& P = out.insertion.rows;
  auto& Q = out.recording.rows;
  for (std::size_t step = 0; step < p.size(); ++step) {
    std::size_t x = p[step];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == P.size()) {
        P.push_back({x});
        Q.push_back({step + 1});
        break;
      }
      auto& row = P[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        Q[r].push_back(step + 1);
        break;
      }
      std::swap(x, *it);
    }
  }
  out.shape = out.insertion.shape();
  return out;
}

}  // namespace dsort
