#include "ratlines/cli/surface_io.hpp"

namespace ratlines {

const std::vector<CorpusSurface>& corpus() {
  static const std::vector<CorpusSurface> surfaces = {
      {"S1", R"(name: S1
x.num: -s^3+3*t^2*s+3*s
y.num: 3*s^2*t-t^3+3*t
z.num: 3*s^2-3*t^2
)"},
      {"S2", R"(name: S2
x.num: (s-1)*(t*s+t-1)
x.den: -t+t^2+s-s^2
y.num: -t^2*s+t+s-1
y.den: -t+t^2+s-s^2
z.num: t*(1-t-s^2)
z.den: -t+t^2+s-s^2
)"},
      {"S3", R"(name: S3
x.num: s*t
y.num: s^2*(t-1)
z.num: s^3*(t+1)
)"},
      {"S4", R"(name: S4
x.num: t+s^3+t^3+1
y.num: 2*s*t+s+s^3+t^3+1
y.den: s
z.num: 3*t^2-t+s^3+t^3+1
z.den: t
)"},
      {"S6", R"(name: S6
x.num: t^3*(t^2+1)+s
x.den: t^2+1
y.num: t+s
y.den: 1+s
z.num: t^5+s
)"},
      {"S7", R"(name: S7
x.num: t^3-s
y.num: t*s^3
z.num: s^4+t^3
)"},
      {"S8", R"(name: S8
x.num: t
y.num: s^2
z.num: t^5+s
)"},
      {"S9", R"(name: S9
x.num: s
x.den: t^2
y.num: s^3+t^2
y.den: s+t
z.num: t^3
)"},
      {"S10", R"(name: S10
x.num: t^4+2*s^3-s*t^2-2*s*t
x.den: -2*s^4+2*s^3+t^3+s^2
y.num: -2*s^4+2*s^2*t^2-2*t^4+s*t^2-t
y.den: -2*s^4+2*s^3+t^3+s^2
z.num: -s^3*t+s*t^3+2*t^3+2*s
z.den: -2*s^4+2*s^3+t^3+s^2
)"},
      {"S11", R"(name: S11
x.num: t^3*s^3
y.num: t^2*s^4
z.num: s^5
)"},
      {"S13", R"(name: S13
x.num: t*(s^2-t^2-s)
x.den: -73*s^4+97*s^2*t^2-62*s^3-56*s^2+87*t
y.num: s*(-2*t^3+2*s*t-2*t^2+s-1)
y.den: -73*s^4+97*s^2*t^2-62*s^3-56*s^2+87*t
z.num: s*(-2*s^3-2*s^2*t-t^2+1)
z.den: -73*s^4+97*s^2*t^2-62*s^3-56*s^2+87*t
)"},
      {"S14", R"(name: S14
x.num: t*(-s^2*t+2*s*t^2+t^2+2*s-t)
x.den: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
y.num: s*(s^3*t+2*s*t^3-2*s^3+2*s*t^2)
y.den: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
z.num: s*(-2*s^3*t-2*s^2*t^2-s*t)
z.den: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
)"},
      {"S15", R"(name: S15
x.num: t
y.num: t^2*(s^2+1)
z.num: s^2+s+1
)"},
      {"S17", R"(name: S17
x.num: t^8
y.num: s^8
z.num: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
)"},
      {"S18", R"(name: S18
x.num: t^10
y.num: s^10
z.num: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
)"},
      {"S19", R"(name: S19
x.num: t^9
y.num: s^9
z.num: -10*s^4-83*s^2*t^2-4*s*t^3-73*s^2+97*t^2-62*t
)"},
      {"S20", R"(name: S20
x.num: t^7
y.num: s^7
z.num: -82*s^7+62*s^5*t^2-10*s^3*t^4-83*t^7-4*s^2-73*s*t
)"},
      {"S21", R"(name: S21
x.num: t^12
y.num: s^12
z.num: -82*s^2*t^9+62*s^3*t^7-10*s^8-83*s^7*t-4*s*t^7-73*s^2
)"},
      {"S22", R"(name: S22
x.num: t^13
y.num: s^13
z.num: -82*s^7+62*s^5*t^2-10*s^3*t^4-83*t^7-4*s^2-73*s*t
)"},
  };
  return surfaces;
}

const std::vector<CorpusRow>& corpus_table() {
  static const std::vector<CorpusRow> rows = {
      {"S1*", "S1", true, 2},
      {"S2*", "S2", true, 18},
      {"S4*", "S4", true, 1},
      {"S6*", "S6", true, 1},
      {"S7*", "S7", true, 1},
      {"S8*", "S8", true, 0},
      {"S9*", "S9", true, 0},
      {"S10", "S10", false, 0},
      {"S11*", "S11", true, 0},
      {"S13", "S13", false, 1},
      {"S14", "S14", false, 2},
      {"S15*", "S15", true, 2},
      {"S17", "S17", false, 0},
      {"S18", "S18", false, 0},
      {"S19", "S19", false, 0},
      {"S20", "S20", false, 2},
      {"S21", "S21", false, 1},
      {"S22", "S22", false, 0},
  };
  return rows;
}

}  // namespace ratlines
