#include "stringex/mutation.hpp"

namespace stringex {

QuiverMutationTrace mutate_quiver_traced(const UsualQuiver& q, const ClosedStringId& k) {
  if (std::find(q.vertices.begin(), q.vertices.end(), k) == q.vertices.end())
    throw Error(ErrorCode::UnknownVertex, "no vertex " + to_string(k));

  QuiverMutationTrace trace;

  // (i) i -a-> k -b-> j contributes a*b arrows i -> j
  UsualQuiver step = q;
  for (const auto& [in, a] : q.arrows) {
    if (in.second != k) continue;
    for (const auto& [out, b] : q.arrows) {
      if (out.first != k) continue;
      step.arrows[{in.first, out.second}] += a * b;
    }
  }
  trace.with_composites = step;

  // (ii) reverse arrows incident with k
  UsualQuiver reversed{step.vertices, {}};
  for (const auto& [arrow, count] : step.arrows) {
    if (arrow.first == k || arrow.second == k)
      reversed.arrows[{arrow.second, arrow.first}] += count;
    else
      reversed.arrows[arrow] += count;
  }
  trace.reversed = reversed;

  // (iii) cancel 2-cycles
  UsualQuiver reduced{reversed.vertices, {}};
  for (const auto& [arrow, count] : reversed.arrows) {
    const Integer back = reversed.multiplicity(arrow.second, arrow.first);
    if (count > back) reduced.arrows[arrow] = count - back;
  }
  trace.reduced = reduced;
  return trace;
}

UsualQuiver mutate_quiver(const UsualQuiver& q, const ClosedStringId& k) {
  return mutate_quiver_traced(q, k).reduced;
}

}  // namespace stringex
