#pragma once

#include "multigraph.hpp"

namespace crit {

// Moebius ladder: 2n-cycle v0..v_{2n-1} plus the n diagonals v_i v_{n+i}.
// Rim edges tagged "r<i>", spokes "s<i>".  V4 = K4, V6 = K_{3,3}.
Multigraph v2n(int n);

Multigraph complete(int n);                 // K_n
Multigraph complete_bipartite(int a, int b);
Multigraph petersen();
Multigraph q3();                            // 3-cube
Multigraph q3_v();                          // Q3 + apex on one side
Multigraph q3_2e();                         // Q3 + two antipodal chords
Multigraph q3_t();                          // Q3 + triangle + one antipodal chord
Multigraph c3xc3();                         // C3 box C3
Multigraph k34_star();                      // two K_{2,3} joined by a matching M
std::vector<std::pair<int, int>> k34_star_matching();
Multigraph wheel(int rim);                  // W_rim: cycle + hub

// Bicycle wheel: rim cycle of length `rim`, axle edge {x,y}, spokes per
// pattern: pattern[i] in {1,2,3} = spoke to x, to y, or both.
Multigraph bicycle_wheel(int rim, const std::vector<int>& pattern);

// Lookup by name with a parameter list; throws on unknown names.
Multigraph named_graph(const std::string& name, const std::vector<int>& params = {});

}  // namespace crit
