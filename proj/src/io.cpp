#include "cvsim/circuit/io.hpp"

#include <json.hpp>

#include "cvsim/errors.hpp"

namespace cvsim {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "cvsim-circuit/1";

hp::Real parse_real(const json& j, const std::string& what) {
  if (!j.is_string()) throw ParseError("expected decimal string", what);
  try {
    return hp::Real(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), what);
  }
}

hp::Complex parse_complex(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [re, im] pair", what);
  return hp::Complex(parse_real(j[0], what + "[0]"), parse_real(j[1], what + "[1]"));
}

json dump_real(const hp::Real& r) { return r.to_string(); }

json dump_complex(const hp::Complex& z) {
  return json::array({z.real().to_string(), z.imag().to_string()});
}

CircuitGate parse_gate(const json& j, int idx) {
  std::string where = "gates[" + std::to_string(idx) + "]";
  if (!j.is_object() || !j.contains("kind")) throw ParseError("gate must have a kind", where);
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "gaussian") {
    GaussianGate g;
    const json& S = j.at("S");
    const json& d = j.at("d");
    if (!S.is_array() || S.empty() || !d.is_array())
      throw ParseError("gaussian gate needs S matrix and d vector", where);
    int n = static_cast<int>(S.size());
    if (n % 2 != 0 || static_cast<int>(d.size()) != n)
      throw ParseError("gaussian S must be 2m x 2m with matching d", where);
    g.m = n / 2;
    g.S = MatH::Zero(n, n);
    g.d = VecH::Zero(n);
    for (int r = 0; r < n; ++r) {
      if (!S[r].is_array() || static_cast<int>(S[r].size()) != n)
        throw ParseError("gaussian S row has wrong length", where);
      for (int c = 0; c < n; ++c) g.S(r, c) = parse_real(S[r][c], where + ".S");
      g.d(r) = parse_real(d[r], where + ".d");
    }
    return g;
  }
  if (kind == "passive") {
    PassiveLinearGate g;
    const json& W = j.at("W");
    const json& delta = j.at("delta");
    if (!W.is_array() || W.empty() || !delta.is_array())
      throw ParseError("passive gate needs W matrix and delta vector", where);
    int n = static_cast<int>(W.size());
    if (static_cast<int>(delta.size()) != n)
      throw ParseError("passive delta must match W", where);
    g.m = n;
    g.W = MatHC::Zero(n, n);
    g.delta = VecHC::Zero(n);
    for (int r = 0; r < n; ++r) {
      if (!W[r].is_array() || static_cast<int>(W[r].size()) != n)
        throw ParseError("passive W row has wrong length", where);
      for (int c = 0; c < n; ++c) g.W(r, c) = parse_complex(W[r][c], where + ".W");
      g.delta(r) = parse_complex(delta[r], where + ".delta");
    }
    g.phase = j.contains("phase") ? parse_real(j.at("phase"), where + ".phase") : hp::Real(0);
    return g;
  }
  if (kind == "cubic") {
    CubicGate g;
    g.mode = j.at("mode").get<int>();
    g.gamma = parse_real(j.at("gamma"), where + ".gamma");
    return g;
  }
  PrimitiveGate p;
  if (kind == "rotation") {
    p.kind = PrimitiveGate::Kind::Rotation;
    p.mode = j.at("mode").get<int>();
    p.theta = parse_real(j.at("theta"), where + ".theta");
  } else if (kind == "squeeze") {
    p.kind = PrimitiveGate::Kind::Squeeze;
    p.mode = j.at("mode").get<int>();
    p.theta = parse_real(j.at("r"), where + ".r");
  } else if (kind == "displace") {
    p.kind = PrimitiveGate::Kind::Displace;
    p.mode = j.at("mode").get<int>();
    p.alpha = parse_complex(j.at("alpha"), where + ".alpha");
  } else if (kind == "beamsplitter") {
    p.kind = PrimitiveGate::Kind::Beamsplitter;
    const json& modes = j.at("modes");
    if (!modes.is_array() || modes.size() != 2)
      throw ParseError("beamsplitter needs two modes", where);
    p.mode = modes[0].get<int>();
    p.mode2 = modes[1].get<int>();
    p.theta = parse_real(j.at("theta"), where + ".theta");
  } else {
    throw ParseError("unknown gate kind \"" + kind + "\"", where);
  }
  return p;
}

json dump_gate(const CircuitGate& gate) {
  return std::visit(
      [](const auto& g) -> json {
        using T = std::decay_t<decltype(g)>;
        json j;
        if constexpr (std::is_same_v<T, GaussianGate>) {
          j["kind"] = "gaussian";
          json S = json::array();
          json d = json::array();
          for (int r = 0; r < 2 * g.m; ++r) {
            json row = json::array();
            for (int c = 0; c < 2 * g.m; ++c) row.push_back(dump_real(g.S(r, c)));
            S.push_back(row);
            d.push_back(dump_real(g.d(r)));
          }
          j["S"] = S;
          j["d"] = d;
        } else if constexpr (std::is_same_v<T, PassiveLinearGate>) {
          j["kind"] = "passive";
          json W = json::array();
          json delta = json::array();
          for (int r = 0; r < g.m; ++r) {
            json row = json::array();
            for (int c = 0; c < g.m; ++c) row.push_back(dump_complex(g.W(r, c)));
            W.push_back(row);
            delta.push_back(dump_complex(g.delta(r)));
          }
          j["W"] = W;
          j["delta"] = delta;
          if (!g.phase.is_zero()) j["phase"] = dump_real(g.phase);
        } else if constexpr (std::is_same_v<T, CubicGate>) {
          j["kind"] = "cubic";
          j["mode"] = g.mode;
          j["gamma"] = dump_real(g.gamma);
        } else {
          const PrimitiveGate& p = g;
          switch (p.kind) {
            case PrimitiveGate::Kind::Rotation:
              j["kind"] = "rotation";
              j["mode"] = p.mode;
              j["theta"] = dump_real(p.theta);
              break;
            case PrimitiveGate::Kind::Squeeze:
              j["kind"] = "squeeze";
              j["mode"] = p.mode;
              j["r"] = dump_real(p.theta);
              break;
            case PrimitiveGate::Kind::Displace:
              j["kind"] = "displace";
              j["mode"] = p.mode;
              j["alpha"] = dump_complex(p.alpha);
              break;
            case PrimitiveGate::Kind::Beamsplitter:
              j["kind"] = "beamsplitter";
              j["modes"] = json::array({p.mode, p.mode2});
              j["theta"] = dump_real(p.theta);
              break;
          }
        }
        return j;
      },
      gate);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  try {
    if (!j.is_object()) throw ParseError("circuit document must be an object");
    if (j.contains("schema") && j.at("schema").get<std::string>() != kSchema)
      throw ParseError("unsupported schema \"" + j.at("schema").get<std::string>() + "\"");
    if (j.contains("convention")) {
      const json& conv = j.at("convention");
      if (conv.value("ordering", "qqpp") != "qqpp")
        throw ParseError("unsupported quadrature ordering (only qqpp)");
      if (conv.value("displacement", "after") != "after")
        throw ParseError("unsupported displacement convention (only after)");
    }
    Circuit c;
    c.m = j.at("modes").get<int>();
    if (c.m < 1) throw ParseError("modes must be >= 1");
    c.precision_bits = j.value("precision_bits", 512);
    c.label = j.value("label", "");
    hp::ScopedPrecision scope(std::max<hp::Precision>(c.precision_bits, 64));
    if (j.contains("gates")) {
      const json& gates = j.at("gates");
      if (!gates.is_array()) throw ParseError("gates must be an array");
      int idx = 0;
      for (const auto& g : gates) c.gates.push_back(parse_gate(g, idx++));
    }
    auto violations = validate_circuit(c);
    if (!violations.empty()) throw ValidationError("circuit validation failed", violations);
    return c;
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_circuit(const Circuit& c) {
  json j;
  j["schema"] = kSchema;
  j["convention"] = {{"ordering", "qqpp"}, {"displacement", "after"}};
  j["modes"] = c.m;
  j["precision_bits"] = static_cast<long>(c.precision_bits);
  if (!c.label.empty()) j["label"] = c.label;
  json gates = json::array();
  for (const auto& g : c.gates) gates.push_back(dump_gate(g));
  j["gates"] = gates;
  return j.dump(2) + "\n";
}

std::string content_digest(const std::string& text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace cvsim
