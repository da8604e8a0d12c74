#include "tamari/rise_fall.hpp"

#include <string>

#include "tamari/classifiers.hpp"
#include "tamari/error.hpp"

namespace tamari {

RangeRelation rise(const RangeRelation& r) {
  RangeRelation out(r.size() + 1);
  for (const auto& [y, x] : r.decreasing()) out.add(y, x);
  for (const auto& [x, y] : r.increasing()) out.add(x + 1, y + 1);
  return out;
}

RangeRelation rise(const IntervalPoset& p) { return rise(p.relation()); }

RangeRelation rise_k(const RangeRelation& r, int k) {
  if (k < 0) throw PreconditionError("NegativeRiseCount", std::to_string(k));
  RangeRelation out = r;
  for (int step = 0; step < k; ++step) out = rise(out);
  return out;
}

RangeRelation rise_k(const IntervalPoset& p, int k) { return rise_k(p.relation(), k); }

RangeRelation fall(const IntervalPoset& p) {
  const int n = p.size();
  if (n < 2) throw PreconditionError("FallDomain", "fall needs size >= 2");
  if ((p.above(1) & element_range_mask(2, n)) != 0) {
    throw PreconditionError("FallDomain", "increasing relation starting at 1");
  }
  if ((p.above(n) & element_range_mask(1, n - 1)) != 0) {
    throw PreconditionError("FallDomain", "decreasing relation starting at " + std::to_string(n));
  }
  RangeRelation out(n - 1);
  for (const auto& [y, x] : p.decreasing()) out.add(y, x);
  for (const auto& [x, y] : p.increasing()) out.add(x - 1, y - 1);
  return out;
}

bool rises_stay_valid(const IntervalPoset& p, int max_rises) {
  RangeRelation r = p.relation();
  for (int k = 1; k <= max_rises; ++k) {
    r = rise(r);
    if (!is_valid(validate(r))) return false;
  }
  return true;
}

IntervalPoset insert_fik(const IntervalPoset& p, int i, int k) {
  const int n = p.size();
  if (!(1 <= i && i <= k && k <= n + 1)) {
    throw PreconditionError("InsertionIndices", "need 1 <= i <= k <= n+1, got i=" +
                                                    std::to_string(i) + " k=" +
                                                    std::to_string(k) + " n=" +
                                                    std::to_string(n));
  }
  const StatPair s = stat(p);
  if (s.dr > s.ir) throw PreconditionError("NotInfinitelyModern", "dr > ir");
  if (s.dr > i || k - 1 > s.ir) {
    throw PreconditionError("InsertionIndices",
                            "need dr <= i and k-1 <= ir, got (ir, dr) = (" +
                                std::to_string(s.ir) + ", " + std::to_string(s.dr) + ")");
  }

  RangeRelation r(n + 1);
  if (k <= n) r.add(k, k + 1);
  if (i >= 2) r.add(i, i - 1);
  for (const auto& [x, y] : p.increasing()) {
    if (y < k) {
      r.add(x, y);
    } else if (x < k) {
      r.add(x, y + 1);
    } else {
      r.add(x + 1, y + 1);
    }
  }
  for (const auto& [y, x] : p.decreasing()) {
    if (i <= x) {
      r.add(y + 1, x + 1);
    } else if (i <= y) {
      r.add(y + 1, x);
    } else {
      r.add(y, x);
    }
  }
  return IntervalPoset::from_relation(r);
}

IntervalPoset remove_rho(const IntervalPoset& p) {
  const int size = p.size();
  if (size < 2) throw PreconditionError("RemovalDomain", "removal needs size >= 2");
  if (!is_infinitely_modern(p)) throw PreconditionError("NotInfinitelyModern", "dr > ir");
  const StatPair s = stat(p);
  const int k = s.ir;
  const int i = s.dr;
  const int n = size - 1;

  RangeRelation r(n);
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if ((x < k && k <= y && p.related(x, y + 1)) || (k <= x && p.related(x + 1, y + 1))) {
        r.add(x, y);
      }
      if ((y < i && p.related(y, x)) || (x < i && i <= y && p.related(y + 1, x))) {
        r.add(y, x);
      }
    }
  }
  return IntervalPoset::from_relation(r);
}

}  // namespace tamari
