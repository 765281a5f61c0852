#pragma once

// Brute-force Littlewood-Richardson product for two-row partitions, used as
// an independent check of schubert::multiply. The coefficient of sigma_nu in
// sigma_lambda * sigma_mu is the number of LR skew tableaux of shape
// nu/lambda and content mu: semistandard fillings whose reverse reading word
// is a lattice word. This file enumerates those fillings directly and never
// touches the Pieri-based product.

#include <vector>

#include "cibound/schubert.hpp"

namespace cibound::schubert {

namespace lr_detail {

/// Counts LR fillings of the two-row skew shape nu/lambda with content
/// (mu.a ones, mu.b twos) by enumerating the number of 1s placed in each row.
/// Rows are weakly increasing by construction; column strictness and the
/// lattice condition are checked cell by cell.
inline int count_lr_tableaux(Partition2 nu, Partition2 lambda, Partition2 mu) {
  const int len1 = nu.a - lambda.a;
  const int len2 = nu.b - lambda.b;
  if (len1 < 0 || len2 < 0) return 0;
  if (len1 + len2 != mu.weight()) return 0;

  int count = 0;
  for (int ones1 = 0; ones1 <= len1; ++ones1) {
    for (int ones2 = 0; ones2 <= len2; ++ones2) {
      if (ones1 + ones2 != mu.a) continue;
      if ((len1 - ones1) + (len2 - ones2) != mu.b) continue;

      // row r occupies columns lambda_r+1 .. nu_r; entry is 1 on the first
      // ones_r cells, 2 afterwards
      auto entry1 = [&](int col) { return col <= lambda.a + ones1 ? 1 : 2; };
      auto entry2 = [&](int col) { return col <= lambda.b + ones2 ? 1 : 2; };

      bool ok = true;
      // column strictness wherever both rows are filled
      for (int col = lambda.a + 1; col <= nu.b && ok; ++col)
        if (entry1(col) >= entry2(col)) ok = false;
      // lattice word: read row 1 right-to-left, then row 2 right-to-left
      int seen1 = 0, seen2 = 0;
      for (int col = nu.a; col > lambda.a && ok; --col) {
        (entry1(col) == 1 ? seen1 : seen2)++;
        if (seen2 > seen1) ok = false;
      }
      for (int col = nu.b; col > lambda.b && ok; --col) {
        (entry2(col) == 1 ? seen1 : seen2)++;
        if (seen2 > seen1) ok = false;
      }
      if (ok) ++count;
    }
  }
  return count;
}

}  // namespace lr_detail

/// sigma_lambda * sigma_mu on Gr(2, m) by the tableau rule.
inline SchubertClass lr_product_oracle(int m, Partition2 lambda, Partition2 mu) {
  if (lambda.a > m - 2 || mu.a > m - 2 || lambda.a < lambda.b || mu.a < mu.b || lambda.b < 0 || mu.b < 0)
    throw input_error("lr_product_oracle: partitions must fit the Gr(2,m) box");
  SchubertClass out(m);
  const int total = lambda.weight() + mu.weight();
  for (int na = 0; na <= m - 2; ++na) {
    for (int nb = 0; nb <= na; ++nb) {
      if (na + nb != total) continue;
      const Partition2 nu{na, nb};
      const int c = lr_detail::count_lr_tableaux(nu, lambda, mu);
      if (c != 0) out.add_term(nu, c);
    }
  }
  return out;
}

}  // namespace cibound::schubert
