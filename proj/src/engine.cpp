#include "stiso/engine.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "stiso/brauer.hpp"
#include "stiso/classifier.hpp"
#include "stiso/qform.hpp"

namespace stiso {

namespace {

using json = nlohmann::ordered_json;

// Integers travel as decimal strings so nothing is clipped to machine
// width; plain JSON numbers are accepted on input for convenience.
Int parse_int(const json& j, const std::string& what) {
  try {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw usage_error(what + ": expected a decimal integer, got " + j.dump());
}

Int parse_int_field(const json& payload, const std::string& key, const Int& fallback) {
  if (!payload.contains(key)) return fallback;
  return parse_int(payload.at(key), key);
}

Int parse_required_int(const json& payload, const std::string& key) {
  if (!payload.contains(key)) throw usage_error("missing required field \"" + key + "\"");
  return parse_int(payload.at(key), key);
}

bool parse_bool_field(const json& payload, const std::string& key, bool fallback) {
  if (!payload.contains(key)) return fallback;
  const json& j = payload.at(key);
  if (!j.is_boolean()) throw usage_error(key + ": expected a boolean, got " + j.dump());
  return j.get<bool>();
}

IntVec parse_int_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw usage_error(what + ": expected an array, got " + j.dump());
  IntVec out;
  for (const auto& entry : j) out.push_back(parse_int(entry, what));
  return out;
}

json int_vec_json(const IntVec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json int_mat_json(const IntMat& m) {
  json arr = json::array();
  for (const auto& row : m) arr.push_back(int_vec_json(row));
  return arr;
}

json places_json(const TwoTorsionBrauerClass& cls) {
  json arr = json::array();
  for (const auto& v : cls.ramified) arr.push_back(v.str());
  return arr;
}

std::string require_string(const json& payload, const std::string& key) {
  if (!payload.contains(key) || !payload.at(key).is_string())
    throw usage_error("missing required string field \"" + key + "\"");
  return payload.at(key).get<std::string>();
}

SimpleGroupDescriptor parse_simple_descriptor(const json& payload) {
  const std::string type = require_string(payload, "type");
  if (type == "a-inner") {
    TypeAInner g;
    g.m = parse_required_int(payload, "m");
    g.ind_d = parse_int_field(payload, "ind_d", Int(1));
    g.d = parse_int_field(payload, "d", Int(1));
    return g;
  }
  if (type == "a-outer") return TypeAOuter{};
  if (type == "c") {
    TypeC g;
    g.n = parse_required_int(payload, "n");
    g.algebra_split = parse_bool_field(payload, "algebra_split", true);
    g.adjoint = parse_bool_field(payload, "adjoint", false);
    return g;
  }
  if (type == "d5") {
    TypeD5 g;
    if (payload.contains("form")) {
      auto q = RationalQuadraticForm::parse(require_string(payload, "form"));
      SpinDescriptor sd = spin_descriptor_of(q);
      if (sd.dimension != 10)
        throw usage_error("d5 descriptor: form has dimension " +
                          std::to_string(sd.dimension) + ", expected 10");
      g.simply_connected = true;
      g.disc_trivial = sd.disc_trivial;
      g.clifford_split = sd.clifford_split;
      return g;
    }
    g.simply_connected = parse_bool_field(payload, "simply_connected", true);
    g.disc_trivial = parse_bool_field(payload, "disc_trivial", false);
    g.clifford_split = parse_bool_field(payload, "clifford_split", false);
    return g;
  }
  if (type == "other") {
    OtherType g;
    g.dynkin_label = require_string(payload, "label");
    return g;
  }
  throw usage_error("unknown simple descriptor type \"" + type + "\"");
}

CentralSubgroupSpec parse_subgroup(const json& payload, std::size_t rank_hint) {
  CentralSubgroupSpec spec;
  if (payload.contains("rank")) {
    Int rank_value = parse_required_int(payload, "rank");
    if (rank_value < 1 || rank_value > 4096)
      throw usage_error("rank must be between 1 and 4096");
    spec.rank = static_cast<std::size_t>(rank_value);
  } else {
    spec.rank = rank_hint;
  }
  if (payload.contains("cocharacters")) {
    const json& arr = payload.at("cocharacters");
    if (!arr.is_array()) throw usage_error("cocharacters: expected an array of vectors");
    for (const auto& row : arr)
      spec.cocharacter_generators.push_back(parse_int_vector(row, "cocharacter"));
  }
  if (payload.contains("torsion")) {
    const json& arr = payload.at("torsion");
    if (!arr.is_array()) throw usage_error("torsion: expected an array of generators");
    for (const auto& entry : arr) {
      CentralSubgroupSpec::TorsionGenerator tg;
      tg.modulus = parse_required_int(entry, "modulus");
      if (!entry.contains("exponents"))
        throw usage_error("torsion generator: missing \"exponents\"");
      tg.exponents = parse_int_vector(entry.at("exponents"), "torsion exponents");
      spec.torsion_generators.push_back(std::move(tg));
    }
  }
  return spec;
}

json verdict_witness_json(const Verdict& v) {
  json w;
  if (v.witness_typea) {
    w["j"] = v.witness_typea->j + 1;  // 1-based in documents
    w["k"] = int_vec_json(v.witness_typea->k);
    w["value"] = v.witness_typea->value.str();
    return w;
  }
  if (v.witness_factor) w["factor"] = *v.witness_factor + 1;
  if (v.witness_prime) w["prime"] = v.witness_prime->str();
  if (w.empty() && v.strongly_isotropic) w["rule"] = v.rule;
  return w;
}

void attach_verdict(json& response, const Verdict& v, std::vector<std::string>& trace) {
  response["verdict"] = v.strongly_isotropic;
  json w = verdict_witness_json(v);
  response["witness"] = v.strongly_isotropic ? w : json(nullptr);
  response["reason"] = v.reason;
  trace.push_back("rule: " + v.rule);
  trace.push_back(v.reason);
  if (v.typea_evidence) {
    const auto& ev = *v.typea_evidence;
    std::string basis = "lattice basis rows: ";
    if (ev.lattice_basis.empty()) basis += "(none; zero lattice)";
    for (std::size_t i = 0; i < ev.lattice_basis.size(); ++i) {
      if (i) basis += " ";
      basis += int_vec_json(ev.lattice_basis[i]).dump();
    }
    trace.push_back(basis);
    trace.push_back("residue group size: " + std::to_string(ev.residue_count));
    if (!ev.reduction_values.empty())
      trace.push_back("per-factor reduced indices: " +
                      int_vec_json(ev.reduction_values).dump());
    json evidence;
    evidence["lattice_basis"] = int_mat_json(ev.lattice_basis);
    evidence["residue_count"] = ev.residue_count;
    if (!ev.reduction_values.empty())
      evidence["reduction_values"] = int_vec_json(ev.reduction_values);
    response["evidence"] = evidence;
  }
}

json run_simple(const json& payload, const EngineOptions&, std::vector<std::string>& trace) {
  Verdict v = classify_simple(parse_simple_descriptor(payload));
  json response;
  attach_verdict(response, v, trace);
  return response;
}

json run_semisimple(const json& payload, const EngineOptions&,
                    std::vector<std::string>& trace) {
  SemisimpleDescriptor desc;
  if (!payload.contains("factors") || !payload.at("factors").is_array())
    throw usage_error("semisimple: missing \"factors\" array");
  for (const auto& f : payload.at("factors"))
    desc.factors.push_back(parse_simple_descriptor(f));
  if (payload.contains("center_generators")) {
    for (const auto& row : payload.at("center_generators"))
      desc.center_generators.push_back(parse_int_vector(row, "center generator"));
  }
  SemisimpleDescriptor normalized = desc;
  normalized.validate_and_normalize();
  for (std::size_t i = 0; i < normalized.factors.size(); ++i)
    trace.push_back("factor " + std::to_string(i + 1) + ": projected center order " +
                    projected_center(normalized, i).str());
  Verdict v = classify_semisimple(desc);
  json response;
  attach_verdict(response, v, trace);
  return response;
}

json run_typea(const json& payload, const EngineOptions& options,
               std::vector<std::string>& trace) {
  if (!payload.contains("moduli")) throw usage_error("typea: missing \"moduli\"");
  ModuliVector moduli{parse_int_vector(payload.at("moduli"), "moduli")};
  CentralSubgroupSpec spec =
      parse_subgroup(payload.contains("subgroup") ? payload.at("subgroup") : json::object(),
                     moduli.size());
  Verdict v = typea_engine(moduli, spec, options.enumeration_cap);
  json response;
  attach_verdict(response, v, trace);
  return response;
}

json run_qform_invariants(const json& payload, const EngineOptions&,
                          std::vector<std::string>& trace) {
  auto q = RationalQuadraticForm::parse(require_string(payload, "form"));
  SquareClass d = signed_discriminant(q);
  TwoTorsionBrauerClass hasse = hasse_invariant(q);
  TwoTorsionBrauerClass witt = witt_invariant(q);
  SpinDescriptor sd{q.dimension(), d.trivial(), witt.trivial()};
  json results;
  results["dimension"] = q.dimension();
  results["signed_discriminant"] = d.representative.str();
  results["hasse_ramified"] = places_json(hasse);
  results["witt_ramified"] = places_json(witt);
  results["spin_descriptor"] = {{"dimension", sd.dimension},
                                {"disc_trivial", sd.disc_trivial},
                                {"clifford_split", sd.clifford_split}};
  trace.push_back("signed discriminant: " + d.representative.str());
  trace.push_back("witt ramification: " + places_json(witt).dump());
  json response;
  response["results"] = results;
  return response;
}

json run_qform_isotropy(const json& payload, const EngineOptions&,
                        std::vector<std::string>& trace) {
  auto q = RationalQuadraticForm::parse(require_string(payload, "form"));
  json response;
  if (payload.contains("place")) {
    const std::string text = require_string(payload, "place");
    Place v = Place::real();
    if (text != "real") {
      Int p;
      try {
        p = Int(text);
      } catch (const std::exception&) {
        throw usage_error("place: expected \"real\" or a prime, got \"" + text + "\"");
      }
      v = Place::prime(p);
    }
    bool verdict = is_locally_isotropic(q, v);
    response["verdict"] = verdict;
    response["reason"] = std::string("form is ") + (verdict ? "" : "an") +
                         "isotropic over the completion at " + v.str();
    trace.push_back("local test at " + v.str());
    return response;
  }
  std::string examined;
  for (const auto& v : candidate_places(q)) {
    if (!examined.empty()) examined += ", ";
    examined += v.str();
  }
  trace.push_back("places examined: " + examined);
  bool verdict = is_isotropic(q);
  response["verdict"] = verdict;
  response["reason"] = verdict ? "isotropic at every place of Q"
                               : "anisotropic at some examined place of Q";
  if (!verdict) {
    for (const auto& v : candidate_places(q)) {
      if (!is_locally_isotropic(q, v)) {
        response["reason"] = "anisotropic over the completion at " + v.str();
        trace.push_back("fails at " + v.str());
        break;
      }
    }
  }
  return response;
}

json run_torsor_a(const json& payload, const EngineOptions&,
                  std::vector<std::string>& trace) {
  TypeATorsorData data;
  data.n = parse_required_int(payload, "n");
  data.ind_d = parse_int_field(payload, "ind_d", Int(1));
  data.ind_a = parse_required_int(payload, "ind_a");
  data.d = parse_int_field(payload, "d", Int(1));
  json results;
  bool anisotropic = torsor_a_is_anisotropic(data);
  results["anisotropic"] = anisotropic;
  trace.push_back("ind(A) = " + data.ind_a.str() + ", gcd(ind(A), ind(D)) * n = " +
                  Int(gcd(data.ind_a, data.ind_d) * data.n).str());
  if (payload.contains("moduli")) {
    if (!payload.contains("class_a") || !payload.contains("class_d"))
      throw usage_error("torsor-a lift test needs \"moduli\", \"class_a\" and \"class_d\"");
    ModuliVector moduli{parse_int_vector(payload.at("moduli"), "moduli")};
    GenericBrauerClass class_a(moduli, parse_int_vector(payload.at("class_a"), "class_a"));
    GenericBrauerClass class_d(moduli, parse_int_vector(payload.at("class_d"), "class_d"));
    results["lifts"] = torsor_a_lifts(data.d, class_a, class_d);
  }
  json response;
  response["results"] = results;
  return response;
}

json run_torsor_d5(const json& payload, const EngineOptions&,
                   std::vector<std::string>& trace) {
  auto base = RationalQuadraticForm::parse(require_string(payload, "base"));
  auto twist = RationalQuadraticForm::parse(require_string(payload, "twist"));
  bool verdict = torsor_d5_isotropic(base, twist);
  trace.push_back("base is isotropic with matching dimension and discriminant; "
                  "the torsor verdict is the isotropy of the twist");
  json response;
  response["verdict"] = verdict;
  response["reason"] = verdict ? "the twisted form is isotropic"
                               : "the twisted form is anisotropic";
  return response;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"kind", kind}, {"message", message}};
}

}  // namespace

RunResult run_request(const json& request, const EngineOptions& options) {
  json response;
  response["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
  RunResult result;
  std::vector<std::string> trace;
  try {
    if (!request.is_object()) throw usage_error("request must be a JSON object");
    const std::string command = require_string(request, "command");
    response["command"] = command;
    const json payload = request.contains("payload") ? request.at("payload") : json::object();
    response["input"] = payload;
    json body;
    if (command == "simple") {
      body = run_simple(payload, options, trace);
    } else if (command == "semisimple") {
      body = run_semisimple(payload, options, trace);
    } else if (command == "typea") {
      body = run_typea(payload, options, trace);
    } else if (command == "qform-invariants") {
      body = run_qform_invariants(payload, options, trace);
    } else if (command == "qform-isotropy") {
      body = run_qform_isotropy(payload, options, trace);
    } else if (command == "torsor-a") {
      body = run_torsor_a(payload, options, trace);
    } else if (command == "torsor-d5") {
      body = run_torsor_d5(payload, options, trace);
    } else {
      throw usage_error("unknown command \"" + command + "\"");
    }
    for (auto& [key, value] : body.items()) response[key] = value;
    result.status = Status::ok;
  } catch (const usage_error& e) {
    response["error"] = error_json("usage", e.what());
    result.status = Status::usage;
  } catch (const nlohmann::json::exception& e) {
    response["error"] = error_json("usage", std::string("malformed payload: ") + e.what());
    result.status = Status::usage;
  } catch (const hypothesis_error& e) {
    response["error"] = error_json("hypothesis", e.what());
    result.status = Status::undecided;
  } catch (const resource_error& e) {
    response["error"] = error_json("resource", e.what());
    result.status = Status::undecided;
  } catch (const std::exception& e) {
    response["error"] = error_json("internal", e.what());
    result.status = Status::internal;
  }
  if (options.trace) response["trace"] = trace;
  result.response = std::move(response);
  return result;
}

RunResult run_request_text(std::string_view request_json, const EngineOptions& options) {
  json request;
  try {
    request = json::parse(request_json);
  } catch (const std::exception& e) {
    RunResult result;
    result.status = Status::usage;
    result.response["engine"] = {{"name", kEngineName}, {"version", kEngineVersion}};
    result.response["error"] = error_json("usage", std::string("invalid JSON: ") + e.what());
    return result;
  }
  return run_request(request, options);
}

std::size_t run_batch(std::istream& in, std::ostream& out, const EngineOptions& options) {
  std::size_t count = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    RunResult result = run_request_text(line, options);
    out << result.response.dump() << "\n";
    ++count;
  }
  return count;
}

}  // namespace stiso
