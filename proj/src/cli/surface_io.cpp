#include "ratlines/cli/surface_io.hpp"

#include <sstream>

#include "ratlines/kernel/error.hpp"
#include "ratlines/kernel/parse.hpp"

namespace ratlines {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

SurfaceParam parse_surface(const std::string& text) {
  SurfaceParam S;
  std::array<MPoly, 3> num{}, den{MPoly(1), MPoly(1), MPoly(1)};
  std::array<bool, 3> have{};
  std::istringstream in(text);
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": expected `key: value`");
    const std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == "name") {
      S.name = value;
      continue;
    }
    if (key.size() != 5 || key[1] != '.' || (key[0] != 'x' && key[0] != 'y' && key[0] != 'z') ||
        (key.substr(2) != "num" && key.substr(2) != "den"))
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": unknown key `" + key + "`");
    const int c = key[0] - 'x';
    MPoly p;
    try {
      p = parse_poly(value);
    } catch (const Error& e) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(lineno) + ": " + e.what());
    }
    if (key.substr(2) == "num") {
      num[c] = p;
      have[c] = true;
    } else {
      if (p.is_zero()) throw Error(ErrorCode::ZeroDenominator, "line " + std::to_string(lineno) + ": zero denominator");
      den[c] = p;
    }
  }
  for (int c = 0; c < 3; ++c) {
    if (!have[c]) throw Error(ErrorCode::SyntaxError, std::string("missing ") + char('x' + c) + ".num");
    S.x[c] = RatFunc(num[c], den[c]);
  }
  S.validate();
  return S;
}

std::string print_surface(const SurfaceParam& S) {
  std::ostringstream out;
  if (!S.name.empty()) out << "name: " << S.name << '\n';
  for (int c = 0; c < 3; ++c) {
    out << char('x' + c) << ".num: " << S.x[c].num().to_string() << '\n';
    if (!S.x[c].den().is_one()) out << char('x' + c) << ".den: " << S.x[c].den().to_string() << '\n';
  }
  return out.str();
}

SurfaceParam star_reparam(const SurfaceParam& S) {
  const RatFunc t(MPoly::variable(Var::t)), s(MPoly::variable(Var::s));
  const RatFunc q = t * t + s;
  std::array<std::optional<RatFunc>, kNumVars> map{};
  map[index(Var::t)] = RatFunc(2) * t / q;
  map[index(Var::s)] = RatFunc(3) * s / q;
  SurfaceParam out;
  out.name = S.name.empty() ? S.name : S.name + "*";
  for (int c = 0; c < 3; ++c) out.x[c] = substitute_rational(S.x[c], map);
  return out;
}

std::pair<int, int> bidegree(const SurfaceParam& S) {
  int dt = 0, ds = 0;
  for (const auto& c : S.x)
    for (const MPoly* p : {&c.num(), &c.den()}) {
      dt = std::max(dt, p->degree(Var::t));
      ds = std::max(ds, p->degree(Var::s));
    }
  return {dt, ds};
}

SurfaceParam corpus_surface(const std::string& label) {
  const bool star = !label.empty() && label.back() == '*';
  const std::string base = star ? label.substr(0, label.size() - 1) : label;
  for (const auto& entry : corpus())
    if (entry.name == base) {
      SurfaceParam S = parse_surface(entry.text);
      return star ? star_reparam(S) : S;
    }
  throw Error(ErrorCode::InvalidArgument, "unknown corpus surface `" + label + "`");
}

}  // namespace ratlines
