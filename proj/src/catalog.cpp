#include "artin/catalog.hpp"

#include <algorithm>

namespace artin {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::tA: return "tA";
    case Family::tC: return "tC";
  }
  return "?";
}

CoxeterGraph family_graph(Family f, int n) {
  switch (f) {
    case Family::A: return CoxeterGraph::type_A(n);
    case Family::B: return CoxeterGraph::type_B(n);
    case Family::tA: return CoxeterGraph::affine_A(n);
    case Family::tC: return CoxeterGraph::affine_C(n);
  }
  throw BadParams("unknown family");
}

namespace {

// Everything below works in standard labels: A_n/B_n vertices 1..n
// are bits 0..n-1, affine vertices 0..n are bits 0..n.

std::uint64_t ones_mask(int count) {
  return count >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << count) - 1);
}

// bits for labeled vertices a..b (1-based)
std::uint64_t vmask(int a, int b) { return a > b ? 0 : (ones_mask(b) & ~ones_mask(a - 1)); }

int trailing_ones(std::uint64_t bits) { return std::countr_one(bits); }

// v_phi_d of a disjoint union of A-type runs
int weight_runs_A(std::uint64_t bits, int d) {
  int v = 0;
  while (bits) {
    bits >>= std::countr_zero(bits);
    int len = trailing_ones(bits);
    v += (len + 1) / d;
    bits >>= len;
  }
  return v;
}

int weight_B_component(int len, int d) { return d % 2 == 0 ? len / (d / 2) : len / d; }

// The K_{n,f} matching, steps (a)-(e). Returns the 1-based vertex to toggle,
// or 0 when sigma is critical. bits over vertices 1..n.
int partner_A_vertex(std::uint64_t bits, int n, int f, int d) {
  int off = 0;
  for (;;) {
    if (f >= d) {  // freeze the leading floor(f/d)*d vertices
      int s = (f / d) * d;
      off += s;
      n -= s;
      f -= s;
      bits >>= s;
    }
    if (d - 1 <= n && (bits & vmask(1, d - 1)) == vmask(1, d - 1)) {  // (a)
      if (n == d - 1) return 0;
      return off + d;
    }
    if (n == f) return 0;                       // (b)
    if (bits & vmask(f + 1, f + 1)) return off + f + 1;  // (c)
    if (d - 1 > n || (bits & vmask(f + 2, d - 1)) != vmask(f + 2, d - 1))
      return off + f + 1;  // (d)
    off += f + 1;          // (e)
    bits >>= (f + 1);
    n -= f + 1;
    f = d - 2 - f;
  }
}

// The B_n matching for even d works on the K_q partition; odd d toggles
// vertex 1 everywhere.
int partner_B_vertex(std::uint64_t bits, int n, int d) {
  if (d % 2 == 1) return 1;
  int half = d / 2;
  int run = trailing_ones(bits);
  int q = run / half, r = run % half;
  if (r >= 1) return q * half + 1;  // (a)
  if (n == q * half) return 0;      // full simplex, critical
  if ((q + 1) * half > n || (bits & vmask(q * half + 2, (q + 1) * half)) !=
                                vmask(q * half + 2, (q + 1) * half))
    return q * half + 1;  // (b)
  int shift = q * half + 1;  // (c)
  int t = partner_A_vertex(bits >> shift, n - shift, half - 1, d);
  return t == 0 ? 0 : t + shift;
}

}  // namespace

Matching matching_A(int n, int f, int d) {
  if (n < 0 || f < 0 || d < 2 || n < f) throw BadParams("matching_A: bad (n, f, d)");
  std::uint64_t prefix = ones_mask(f);
  return Matching(
      [n, f, d](Simplex s) -> std::optional<Simplex> {
        int t = partner_A_vertex(s.bits, n, f, d);
        if (t == 0) return std::nullopt;
        return s.toggled(t - 1);
      },
      [prefix](Simplex s) { return (s.bits & prefix) == prefix; });
}

Matching matching_B(int n, int d) {
  if (n < 1 || d < 2) throw BadParams("matching_B: bad (n, d)");
  return Matching([n, d](Simplex s) -> std::optional<Simplex> {
    int t = partner_B_vertex(s.bits, n, d);
    if (t == 0) return std::nullopt;
    return s.toggled(t - 1);
  });
}

Matching matching_tA(int n, int d) {
  if (n < 2 || d < 2) throw BadParams("matching_tA: bad (n, d)");
  return Matching([n, d](Simplex s) -> std::optional<Simplex> {
    int h = trailing_ones(s.bits);
    if (h == n) return std::nullopt;  // sigma = {0..n-1}
    int q = h / d, r = h % d, m = n - q * d;
    // clockwise relabeling: orig r-1..0 -> 1..r, orig n..h+1 -> r+1..m
    std::uint64_t sub = ones_mask(r);
    for (int j = r + 1; j <= m; ++j)
      if (s.contains(n + r + 1 - j)) sub |= std::uint64_t(1) << (j - 1);
    int t = partner_A_vertex(sub, m, r, d);
    if (t == 0) return std::nullopt;
    int orig = (t <= r) ? (r - t) : (n + r + 1 - t);
    return s.toggled(orig);
  });
}

Matching matching_tC(int n, int d) {
  if (n < 2 || d < 2) throw BadParams("matching_tC: bad (n, d)");
  return Matching([n, d](Simplex s) -> std::optional<Simplex> {
    int h = trailing_ones(s.bits);
    if (h == n) return std::nullopt;
    // right-to-left relabeling: orig n..h+1 -> 1..n-h
    std::uint64_t sub = 0;
    for (int j = 1; j <= n - h; ++j)
      if (s.contains(n + 1 - j)) sub |= std::uint64_t(1) << (j - 1);
    int t = partner_B_vertex(sub, n - h, d);
    if (t == 0) return std::nullopt;
    return s.toggled(n + 1 - t);
  });
}

Matching matching_A_independence(int n, int d) {
  if (n < 1 || d < 2) throw BadParams("matching_A_independence: bad (n, d)");
  auto has_long_run = [d](Simplex s) {
    std::uint64_t bits = s.bits;
    while (bits) {
      bits >>= std::countr_zero(bits);
      if (trailing_ones(bits) >= d - 1) return true;
      bits >>= trailing_ones(bits);
    }
    return false;
  };
  return Matching(
      [n, d](Simplex s) -> std::optional<Simplex> {
        // first component with >= d-1 vertices; toggle its d-th vertex
        std::uint64_t bits = s.bits;
        int pos = 1;
        while (bits) {
          int z = std::countr_zero(bits);
          bits >>= z;
          pos += z;
          int len = trailing_ones(bits);
          if (len >= d - 1) {
            int u = pos + d - 1;  // d-th vertex of the run starting at pos
            if (u > n) return std::nullopt;
            return s.toggled(u - 1);
          }
          bits >>= len;
          pos += len;
        }
        return std::nullopt;  // outside the domain
      },
      has_long_run);
}

Matching family_matching(Family f, int n, int d) {
  switch (f) {
    case Family::A: return matching_A(n, 0, d);
    case Family::B: return matching_B(n, d);
    case Family::tA: return matching_tA(n, d);
    case Family::tC: return matching_tC(n, d);
  }
  throw BadParams("unknown family");
}

namespace {

class BitBuilder {
 public:
  BitBuilder& ones(int t) {
    for (int i = 0; i < t; ++i) bits_ |= std::uint64_t(1) << pos_++;
    return *this;
  }
  BitBuilder& zeros(int t) {
    pos_ += t;
    return *this;
  }
  BitBuilder& blocks(int times, int ones1, int zeros1, int ones2 = 0, int zeros2 = 0) {
    for (int i = 0; i < times; ++i) ones(ones1).zeros(zeros1).ones(ones2).zeros(zeros2);
    return *this;
  }
  Simplex take(int expected_width) {
    if (pos_ != expected_width) throw BadParams("catalog cell has wrong width");
    return Simplex(bits_);
  }

 private:
  std::uint64_t bits_ = 0;
  int pos_ = 0;
};

void push_cell(std::vector<CatalogCell>& out, Simplex s, int exponent) {
  out.push_back({s, s.degree(), exponent});
}

void sort_cells(std::vector<CatalogCell>& out) {
  std::sort(out.begin(), out.end(), [](const CatalogCell& a, const CatalogCell& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.cell < b.cell;
  });
}

}  // namespace

std::vector<CatalogCell> critical_A(int n, int f, int d) {
  if (n < 0 || f < 0 || d < 2 || n < f) throw BadParams("critical_A: bad (n, f, d)");
  std::vector<CatalogCell> out;
  if (f >= d) {  // frozen prefix of the largest multiple of d below f
    int s = (f / d) * d;
    for (const auto& c : critical_A(n - s, f - s, d)) {
      Simplex cell((c.cell.bits << s) | ones_mask(s));
      push_cell(out, cell, weight_runs_A(cell.bits, d));
    }
    sort_cells(out);
    return out;
  }
  if (n == f) {
    push_cell(out, Simplex(ones_mask(f)), (f + 1) / d);
    return out;
  }
  if (f == d - 1) return out;  // perfect
  if ((n - f) % d == 0) {
    int k = (n - f) / d;
    BitBuilder b1, b2;
    b1.blocks(k - 1, f, 1, d - 2 - f, 1).ones(f).zeros(1).ones(d - 1);
    b2.blocks(k, f, 1, d - 2 - f, 1).ones(f);
    push_cell(out, b1.take(n), 1);
    push_cell(out, b2.take(n), 0);
  } else if ((n + 1) % d == 0) {
    int k = (n + 1) / d;
    BitBuilder b1, b2;
    b1.blocks(k - 1, f, 1, d - 2 - f, 1).ones(d - 1);
    b2.blocks(k - 1, f, 1, d - 2 - f, 1).ones(f).zeros(1).ones(d - 2 - f);
    push_cell(out, b1.take(n), 1);
    push_cell(out, b2.take(n), 0);
  }
  sort_cells(out);
  return out;
}

std::vector<CatalogCell> critical_B(int n, int d) {
  if (n < 1 || d < 2) throw BadParams("critical_B: bad (n, d)");
  std::vector<CatalogCell> out;
  if (d % 2 == 1) return out;
  int half = d / 2;
  if (n % half != 0) return out;
  int k = n / half;
  for (int q = 0; q <= k - 2; ++q) {
    BitBuilder b;
    b.ones(q * half).blocks(k - q - 2, 0, 1, half - 1, 0).zeros(1).ones(d - 1);
    push_cell(out, b.take(n), q + 1);
  }
  for (int q = 0; q <= k; ++q) {
    BitBuilder b;
    b.ones(q * half).blocks(k - q, 0, 1, half - 1, 0);
    push_cell(out, b.take(n), q);
  }
  sort_cells(out);
  return out;
}

std::vector<CatalogCell> critical_tA(int n, int d) {
  if (n < 2 || d < 2) throw BadParams("critical_tA: bad (n, d)");
  std::vector<CatalogCell> out;
  const int width = n + 1;
  int r = n % d;
  if (r <= d - 2) {
    int k = n / d;
    for (int q = 0; q <= k - 1; ++q) {
      BitBuilder b;
      b.ones(q * d + r).zeros(1).ones(d - 1).zeros(1).blocks(k - q - 1, r, 1, d - 2 - r, 1);
      push_cell(out, b.take(width), q + 1);
    }
    for (int q = 0; q <= k; ++q) {
      BitBuilder b;
      b.ones(q * d + r).zeros(1).blocks(k - q, r, 1, d - 2 - r, 1);
      push_cell(out, b.take(width), q);
    }
  } else {  // n = kd - 1
    int k = (n + 1) / d;
    for (int q = 0; q <= k - 2; ++q)
      for (int rho = 0; rho <= d - 2; ++rho) {
        BitBuilder b;
        b.ones(q * d + rho).zeros(1).ones(d - 1).zeros(1).blocks(k - q - 2, d - 2 - rho, 1, rho, 1)
            .ones(d - 2 - rho).zeros(1);
        push_cell(out, b.take(width), q + 1);
      }
    // q = k-1: the 1^{d-1} block wraps around the cycle and truncates
    for (int rho = 0; rho <= d - 2; ++rho) {
      BitBuilder b;
      b.ones((k - 1) * d + rho).zeros(1).ones(d - 1 - rho);
      push_cell(out, b.take(width), k);
    }
    for (int q = 0; q <= k - 1; ++q)
      for (int rho = 0; rho <= d - 2; ++rho) {
        BitBuilder b;
        b.ones(q * d + rho).zeros(1).blocks(k - q - 1, d - 2 - rho, 1, rho, 1).ones(d - 2 - rho)
            .zeros(1);
        push_cell(out, b.take(width), q);
      }
    push_cell(out, Simplex(ones_mask(n)), k);
  }
  sort_cells(out);
  return out;
}

std::vector<CatalogCell> critical_tC(int n, int d) {
  if (n < 2 || d < 2) throw BadParams("critical_tC: bad (n, d)");
  std::vector<CatalogCell> out;
  const int width = n + 1;
  if (d % 2 == 1) {
    push_cell(out, Simplex(ones_mask(n)), weight_B_component(n, d));
    return out;
  }
  int half = d / 2;
  int r = n % half, k = n / half;
  for (int q1 = 0; q1 <= k - 2; ++q1)
    for (int q2 = 0; q1 + q2 <= k - 2; ++q2) {
      BitBuilder b;
      b.ones(q1 * half + r).zeros(1).ones(d - 1).zeros(1).blocks(k - q1 - q2 - 2, half - 1, 1)
          .ones(q2 * half);
      push_cell(out, b.take(width), q1 + q2 + 1);
    }
  for (int q1 = 0; q1 <= k; ++q1)
    for (int q2 = 0; q1 + q2 <= k; ++q2) {
      BitBuilder b;
      b.ones(q1 * half + r).zeros(1).blocks(k - q1 - q2, half - 1, 1).ones(q2 * half);
      push_cell(out, b.take(width), q1 + q2);
    }
  sort_cells(out);
  return out;
}

std::vector<CatalogCell> critical_family(Family f, int n, int d) {
  switch (f) {
    case Family::A: return critical_A(n, 0, d);
    case Family::B: return critical_B(n, d);
    case Family::tA: return critical_tA(n, d);
    case Family::tC: return critical_tC(n, d);
  }
  throw BadParams("unknown family");
}

std::vector<CatalogCell> critical_A_independence(int n, int d) {
  if (n < 1 || d < 2) throw BadParams("critical_A_independence: bad (n, d)");
  std::vector<CatalogCell> out;
  if (n < d - 1) return out;
  std::uint64_t block = vmask(n - d + 2, n);
  int free_vertices = std::max(0, n - d);  // {1..n-d}; n-d+1 stays empty
  for (std::uint64_t tau = 0;; ++tau) {
    bool ok = true;
    std::uint64_t bits = tau;
    while (bits) {
      bits >>= std::countr_zero(bits);
      if (trailing_ones(bits) > d - 2) {
        ok = false;
        break;
      }
      bits >>= trailing_ones(bits);
    }
    if (ok) {
      Simplex cell(tau | block);
      push_cell(out, cell, weight_runs_A(cell.bits, d));
    }
    if (tau == ones_mask(free_vertices)) break;
  }
  sort_cells(out);
  return out;
}

namespace {

long long sign_pow(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<CatalogIncidence> incidence_B(int n, int d) {
  std::vector<CatalogIncidence> out;
  if (d % 2 == 1 || n % (d / 2) != 0) return out;
  int half = d / 2, k = n / half;
  auto sigma = [&](int q) {
    BitBuilder b;
    b.ones(q * half).blocks(k - q - 2, 0, 1, half - 1, 0).zeros(1).ones(d - 1);
    return b.take(n);
  };
  auto sigmap = [&](int q) {
    BitBuilder b;
    b.ones(q * half).blocks(k - q, 0, 1, half - 1, 0);
    return b.take(n);
  };
  for (int q = 1; q <= k - 2; ++q)
    out.push_back({sigma(q), sigma(q - 1), sign_pow((q - 1) * half)});
  for (int q = 0; q <= k - 2; ++q)
    out.push_back({sigma(q), sigmap(q), sign_pow((k - 1) * (half - 1) + q)});
  for (int q = 2; q <= k; ++q)
    out.push_back({sigmap(q), sigma(q - 2), sign_pow(k * (half - 1) + q)});
  for (int q = 1; q <= k; ++q)
    out.push_back({sigmap(q), sigmap(q - 1), sign_pow((q - 1) * half)});
  return out;
}

std::vector<CatalogIncidence> incidence_tA(int n, int d) {
  std::vector<CatalogIncidence> out;
  int r = n % d;
  const int width = n + 1;
  if (r <= d - 2) {
    int k = n / d;
    for (int q = 0; q <= k - 1; ++q) {
      BitBuilder bt, btp;
      bt.ones(q * d + r).zeros(1).ones(d - 1).zeros(1).blocks(k - q - 1, r, 1, d - 2 - r, 1);
      btp.ones(q * d + r).zeros(1).blocks(k - q, r, 1, d - 2 - r, 1);
      out.push_back({bt.take(width), btp.take(width), 1});
    }
  } else {
    int k = (n + 1) / d;
    auto sp = [&](int q, int rho) {
      BitBuilder b;
      b.ones(q * d + rho).zeros(1).blocks(k - q - 1, d - 2 - rho, 1, rho, 1).ones(d - 2 - rho)
          .zeros(1);
      return b.take(width);
    };
    for (int q = 0; q <= k - 2; ++q)
      for (int rho = 0; rho <= d - 2; ++rho) {
        BitBuilder b;
        b.ones(q * d + rho).zeros(1).ones(d - 1).zeros(1).blocks(k - q - 2, d - 2 - rho, 1, rho, 1)
            .ones(d - 2 - rho).zeros(1);
        out.push_back({b.take(width), sp(q, rho), 1});
      }
    for (int rho = 0; rho <= d - 2; ++rho) {
      BitBuilder b;
      b.ones((k - 1) * d + rho).zeros(1).ones(d - 1 - rho);
      out.push_back({b.take(width), sp(k - 1, rho), 1});
    }
    for (int rho = 0; rho <= d - 2; ++rho)
      out.push_back({Simplex(ones_mask(n)), sp(k - 1, rho), 1});
  }
  return out;
}

std::vector<CatalogIncidence> incidence_tC(int n, int d) {
  std::vector<CatalogIncidence> out;
  if (d % 2 == 1) return out;
  int half = d / 2, r = n % half, k = n / half;
  const int width = n + 1;
  auto sigma = [&](int q1, int q2) {
    BitBuilder b;
    b.ones(q1 * half + r).zeros(1).ones(d - 1).zeros(1).blocks(k - q1 - q2 - 2, half - 1, 1)
        .ones(q2 * half);
    return b.take(width);
  };
  auto sigmap = [&](int q1, int q2) {
    BitBuilder b;
    b.ones(q1 * half + r).zeros(1).blocks(k - q1 - q2, half - 1, 1).ones(q2 * half);
    return b.take(width);
  };
  for (int q1 = 0; q1 <= k - 2; ++q1)
    for (int q2 = 0; q1 + q2 <= k - 2; ++q2) {
      long long alpha = static_cast<long long>(k - q2) * (half - 1) + q1 + r + half;
      long long beta = static_cast<long long>(q1) * half + r;
      if (q2 >= 1) out.push_back({sigma(q1, q2), sigma(q1, q2 - 1), sign_pow(alpha)});
      if (q1 >= 1) out.push_back({sigma(q1, q2), sigma(q1 - 1, q2), sign_pow(beta + 1)});
      out.push_back({sigma(q1, q2), sigmap(q1, q2), sign_pow(beta + half + 1)});
    }
  for (int q1 = 0; q1 <= k; ++q1)
    for (int q2 = 0; q1 + q2 <= k; ++q2) {
      long long alpha = static_cast<long long>(k - q2) * (half - 1) + q1 + r + half;
      long long beta = static_cast<long long>(q1) * half + r;
      if (q2 >= 2) out.push_back({sigmap(q1, q2), sigma(q1, q2 - 2), sign_pow(beta + 1)});
      if (q1 >= 2) out.push_back({sigmap(q1, q2), sigma(q1 - 2, q2), sign_pow(beta)});
      if (q2 >= 1) out.push_back({sigmap(q1, q2), sigmap(q1, q2 - 1), sign_pow(alpha + 1)});
      if (q1 >= 1) out.push_back({sigmap(q1, q2), sigmap(q1 - 1, q2), sign_pow(beta + half)});
    }
  return out;
}

}  // namespace artin
