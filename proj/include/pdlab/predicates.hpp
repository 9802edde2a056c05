#pragma once

#include "pdlab/vec.hpp"

namespace pdlab {

// Sign predicates for planar geometry. Each is evaluated in doubles with a
// conservative forward-error filter; ambiguous cases fall back to exact
// rational arithmetic, so the returned sign is always the true sign.

// > 0 : c strictly left of a->b, < 0 : strictly right, 0 : collinear.
int orient2d(Vec2 a, Vec2 b, Vec2 c);

// For CCW triangle (a,b,c): > 0 iff d strictly inside the circumdisk,
// 0 iff cocircular, < 0 iff strictly outside.
int incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Count of exact-arithmetic fallbacks taken (diagnostic, not thread safe).
long predicate_exact_fallbacks();

} // namespace pdlab
