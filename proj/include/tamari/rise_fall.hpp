#pragma once

#include "tamari/relation.hpp"

namespace tamari {

// Size n+1: decreasing pairs kept, every increasing pair (x, y) moved to
// (x+1, y+1). Total on any relation; validity is checked separately.
RangeRelation rise(const RangeRelation& r);
RangeRelation rise(const IntervalPoset& p);

// k-fold rise; rise_k(p, 0) is p itself.
RangeRelation rise_k(const RangeRelation& r, int k);
RangeRelation rise_k(const IntervalPoset& p, int k);

// Size n-1: decreasing pairs kept, increasing pairs moved by -1. Requires
// n >= 2, no increasing relation from 1 and no decreasing relation from n.
RangeRelation fall(const IntervalPoset& p);

// Iterated-rise oracle: every rise_k(p, k) for 1 ≤ k ≤ max_rises validates.
bool rises_stay_valid(const IntervalPoset& p, int max_rises);

// f_{i,k}: inserts a point at position k on the increasing side (adding
// k ⊴ k+1 unless k = n+1) and at position i on the decreasing side (adding
// i ⊴ i-1 unless i = 1), then closes transitively. Requires
// 1 ≤ i ≤ k ≤ n+1, p infinitely modern, dr(p) ≤ i and k-1 ≤ ir(p).
IntervalPoset insert_fik(const IntervalPoset& p, int i, int k);

// ρ: removes the point k = ir(p) from the increasing side and i = dr(p) from
// the decreasing side. Requires p infinitely modern of size >= 2.
IntervalPoset remove_rho(const IntervalPoset& p);

}  // namespace tamari
