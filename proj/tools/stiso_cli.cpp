// Command line front end: builds request documents from flags, sends them
// through the C API and prints the JSON responses. Exit codes: 0 verdict
// produced, 2 usage error, 3 undecided (hypothesis or resource), 4 internal.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stiso.h"

namespace {

using json = nlohmann::ordered_json;

struct EngineHandle {
  stiso_engine* ptr;
  EngineHandle() : ptr(stiso_engine_new()) {}
  ~EngineHandle() { stiso_engine_free(ptr); }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, sep)) out.push_back(token);
  return out;
}

json int_list(const std::string& csv, const char* what) {
  json arr = json::array();
  for (const auto& tok : split(csv, ',')) {
    if (tok.empty()) throw CLI::ValidationError(std::string(what) + ": empty entry");
    arr.push_back(tok);
  }
  return arr;
}

// Factor syntax for the semisimple command:
//   a-inner:m[,ind_d[,d]]     e.g. a-inner:4,1,2
//   a-outer
//   c:n[,split|nonsplit][,sc|adjoint]
//   d5:flags as sc|nsc,disc|nodisc,cliff|nocliff   e.g. d5:sc,disc,cliff
//   other:LABEL               e.g. other:E_8
json parse_factor(const std::string& text) {
  auto pos = text.find(':');
  std::string kind = text.substr(0, pos);
  std::vector<std::string> args =
      pos == std::string::npos ? std::vector<std::string>{} : split(text.substr(pos + 1), ',');
  json f;
  if (kind == "a-inner") {
    if (args.empty()) throw CLI::ValidationError("a-inner factor needs m[,ind_d[,d]]");
    f["type"] = "a-inner";
    f["m"] = args[0];
    if (args.size() > 1) f["ind_d"] = args[1];
    if (args.size() > 2) f["d"] = args[2];
  } else if (kind == "a-outer") {
    f["type"] = "a-outer";
  } else if (kind == "c") {
    if (args.empty()) throw CLI::ValidationError("c factor needs n[,split|nonsplit][,sc|adjoint]");
    f["type"] = "c";
    f["n"] = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "split") f["algebra_split"] = true;
      else if (args[i] == "nonsplit") f["algebra_split"] = false;
      else if (args[i] == "sc") f["adjoint"] = false;
      else if (args[i] == "adjoint") f["adjoint"] = true;
      else throw CLI::ValidationError("unknown c factor option \"" + args[i] + "\"");
    }
  } else if (kind == "d5") {
    f["type"] = "d5";
    f["simply_connected"] = false;
    f["disc_trivial"] = false;
    f["clifford_split"] = false;
    for (const auto& a : args) {
      if (a == "sc") f["simply_connected"] = true;
      else if (a == "nsc") f["simply_connected"] = false;
      else if (a == "disc") f["disc_trivial"] = true;
      else if (a == "nodisc") f["disc_trivial"] = false;
      else if (a == "cliff") f["clifford_split"] = true;
      else if (a == "nocliff") f["clifford_split"] = false;
      else throw CLI::ValidationError("unknown d5 factor option \"" + a + "\"");
    }
  } else if (kind == "other") {
    if (args.empty()) throw CLI::ValidationError("other factor needs a label");
    f["type"] = "other";
    f["label"] = args[0];
  } else {
    throw CLI::ValidationError("unknown factor kind \"" + kind + "\"");
  }
  return f;
}

int dispatch(EngineHandle& engine, const json& request) {
  char* response = nullptr;
  int status = stiso_run(engine.ptr, request.dump().c_str(), &response);
  if (response != nullptr) {
    std::cout << response << "\n";
    stiso_string_free(response);
  } else {
    std::cerr << "error: " << stiso_last_error(engine.ptr) << "\n";
  }
  return status;
}

int run_batch(EngineHandle& engine, const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) {
      std::cerr << "error: cannot open batch file \"" << path << "\"\n";
      return STISO_ERR_USAGE;
    }
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    char* response = nullptr;
    stiso_run(engine.ptr, line.c_str(), &response);
    if (response != nullptr) {
      std::cout << response << "\n";
      stiso_string_free(response);
    } else {
      json record;
      record["error"] = {{"kind", "internal"}, {"message", stiso_last_error(engine.ptr)}};
      std::cout << record.dump() << "\n";
    }
  }
  return STISO_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stiso - exact decision engine for strong isotropy of semisimple "
               "group descriptors and quadratic form invariants over Q"};
  app.require_subcommand(0, 1);

  std::string cap;
  bool trace = false;
  std::string batch_path;
  app.add_option("--enumeration-cap", cap,
                 "residue enumeration cap (default 1000000)");
  app.add_flag("--trace", trace, "attach a derivation trace to responses");
  app.add_option("--batch", batch_path,
                 "newline-delimited request file ('-' for stdin); one response per line");

  // simple
  auto* simple = app.add_subcommand("simple", "classify one simple group descriptor");
  std::string s_type;
  std::string s_m, s_ind_d = "1", s_d = "1", s_n, s_label, s_form;
  bool s_nonsplit = false, s_adjoint = false;
  bool s_sc = false, s_disc = false, s_cliff = false;
  simple->add_option("--type", s_type, "a-inner | a-outer | c | d5 | other")->required();
  simple->add_option("--m", s_m, "inner type A: number of rows m");
  simple->add_option("--ind-d", s_ind_d, "inner type A: index of D");
  simple->add_option("--d", s_d, "inner type A: quotient parameter d");
  simple->add_option("--n", s_n, "type C: rank n");
  simple->add_flag("--nonsplit", s_nonsplit, "type C: underlying algebra not split");
  simple->add_flag("--adjoint", s_adjoint, "type C: adjoint member of the isogeny class");
  simple->add_flag("--simply-connected", s_sc, "type D5: simply connected");
  simple->add_flag("--disc-trivial", s_disc, "type D5: trivial signed discriminant");
  simple->add_flag("--clifford-split", s_cliff, "type D5: split Clifford invariant");
  simple->add_option("--form", s_form, "type D5: diagonal form grounding the flags");
  simple->add_option("--label", s_label, "other: Dynkin label");

  // semisimple
  auto* semisimple =
      app.add_subcommand("semisimple", "classify a quotient of a product of simple groups");
  std::vector<std::string> ss_factors;
  std::vector<std::string> ss_center;
  semisimple->add_option("--factor", ss_factors,
                         "factor descriptor, e.g. a-inner:2 or c:2,split,sc (repeatable)")
      ->required();
  semisimple->add_option("--center", ss_center,
                         "center generator as comma separated exponents (repeatable)");

  // typea
  auto* typea = app.add_subcommand(
      "typea", "lattice criterion for split type A products (GL_n1 x ... x GL_nr)/C");
  std::string t_moduli;
  std::vector<std::string> t_cochar;
  std::vector<std::string> t_torsion;
  typea->add_option("--moduli", t_moduli, "comma separated degrees n_1,...,n_r")->required();
  typea->add_option("--cochar", t_cochar,
                    "cocharacter generator of C as comma separated integers (repeatable)");
  typea->add_option("--torsion", t_torsion,
                    "torsion generator as m:e_1,...,e_r (repeatable)");

  // qform commands
  auto* qinv = app.add_subcommand("qform-invariants",
                                  "signed discriminant, Hasse and Witt invariants");
  std::string qi_form;
  qinv->add_option("--form", qi_form, "diagonal entries, e.g. 1,-1,2/3")->required();

  auto* qiso = app.add_subcommand("qform-isotropy", "isotropy over Q (or one completion)");
  std::string qs_form, qs_place;
  qiso->add_option("--form", qs_form, "diagonal entries")->required();
  qiso->add_option("--place", qs_place, "optional place: real or a prime");

  // torsor commands
  auto* ta = app.add_subcommand("torsor-a", "inner type A torsor tests");
  std::string ta_n, ta_ind_d = "1", ta_ind_a, ta_d = "1", ta_moduli, ta_ca, ta_cd;
  ta->add_option("--n", ta_n, "number of rows")->required();
  ta->add_option("--ind-d", ta_ind_d, "index of D");
  ta->add_option("--ind-a", ta_ind_a, "index of the torsor's algebra A")->required();
  ta->add_option("--d", ta_d, "quotient parameter d");
  ta->add_option("--moduli", ta_moduli, "moduli for the lift test");
  ta->add_option("--class-a", ta_ca, "coefficients of [A] for the lift test");
  ta->add_option("--class-d", ta_cd, "coefficients of [D] for the lift test");

  auto* td5 = app.add_subcommand("torsor-d5", "isotropy of an SO(q) torsor");
  std::string td_base, td_twist;
  td5->add_option("--base", td_base, "base form")->required();
  td5->add_option("--twist", td_twist, "twisted form")->required();

  // raw request
  auto* run = app.add_subcommand("run", "run one raw request document");
  std::string raw;
  run->add_option("request", raw, "request JSON (reads stdin when omitted)");

  CLI11_PARSE(app, argc, argv);

  EngineHandle engine;
  if (engine.ptr == nullptr) {
    std::cerr << "error: engine allocation failed\n";
    return STISO_ERR_INTERNAL;
  }
  if (!cap.empty() && stiso_engine_set_enumeration_cap(engine.ptr, cap.c_str()) != STISO_OK) {
    std::cerr << "error: " << stiso_last_error(engine.ptr) << "\n";
    return STISO_ERR_USAGE;
  }
  stiso_engine_set_trace(engine.ptr, trace ? 1 : 0);

  if (!batch_path.empty()) {
    if (app.get_subcommands().size() > 0) {
      std::cerr << "error: --batch cannot be combined with a subcommand\n";
      return STISO_ERR_USAGE;
    }
    return run_batch(engine, batch_path);
  }

  try {
    json request;
    if (simple->parsed()) {
      json payload;
      payload["type"] = s_type;
      if (s_type == "a-inner") {
        payload["m"] = s_m;
        payload["ind_d"] = s_ind_d;
        payload["d"] = s_d;
      } else if (s_type == "c") {
        payload["n"] = s_n;
        payload["algebra_split"] = !s_nonsplit;
        payload["adjoint"] = s_adjoint;
      } else if (s_type == "d5") {
        if (!s_form.empty()) {
          payload["form"] = s_form;
        } else {
          payload["simply_connected"] = s_sc;
          payload["disc_trivial"] = s_disc;
          payload["clifford_split"] = s_cliff;
        }
      } else if (s_type == "other") {
        payload["label"] = s_label;
      }
      request = {{"command", "simple"}, {"payload", payload}};
    } else if (semisimple->parsed()) {
      json payload;
      payload["factors"] = json::array();
      for (const auto& f : ss_factors) payload["factors"].push_back(parse_factor(f));
      if (!ss_center.empty()) {
        payload["center_generators"] = json::array();
        for (const auto& z : ss_center)
          payload["center_generators"].push_back(int_list(z, "--center"));
      }
      request = {{"command", "semisimple"}, {"payload", payload}};
    } else if (typea->parsed()) {
      json payload;
      payload["moduli"] = int_list(t_moduli, "--moduli");
      json subgroup;
      if (!t_cochar.empty()) {
        subgroup["cocharacters"] = json::array();
        for (const auto& c : t_cochar)
          subgroup["cocharacters"].push_back(int_list(c, "--cochar"));
      }
      if (!t_torsion.empty()) {
        subgroup["torsion"] = json::array();
        for (const auto& t : t_torsion) {
          auto pos = t.find(':');
          if (pos == std::string::npos)
            throw CLI::ValidationError("--torsion expects m:e_1,...,e_r");
          json tg;
          tg["modulus"] = t.substr(0, pos);
          tg["exponents"] = int_list(t.substr(pos + 1), "--torsion");
          subgroup["torsion"].push_back(tg);
        }
      }
      payload["subgroup"] = subgroup;
      request = {{"command", "typea"}, {"payload", payload}};
    } else if (qinv->parsed()) {
      request = {{"command", "qform-invariants"}, {"payload", {{"form", qi_form}}}};
    } else if (qiso->parsed()) {
      json payload{{"form", qs_form}};
      if (!qs_place.empty()) payload["place"] = qs_place;
      request = {{"command", "qform-isotropy"}, {"payload", payload}};
    } else if (ta->parsed()) {
      json payload{{"n", ta_n}, {"ind_d", ta_ind_d}, {"ind_a", ta_ind_a}, {"d", ta_d}};
      if (!ta_moduli.empty()) {
        payload["moduli"] = int_list(ta_moduli, "--moduli");
        payload["class_a"] = int_list(ta_ca, "--class-a");
        payload["class_d"] = int_list(ta_cd, "--class-d");
      }
      request = {{"command", "torsor-a"}, {"payload", payload}};
    } else if (td5->parsed()) {
      request = {{"command", "torsor-d5"},
                 {"payload", {{"base", td_base}, {"twist", td_twist}}}};
    } else if (run->parsed()) {
      std::string text = raw;
      if (text.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
      }
      char* response = nullptr;
      int status = stiso_run(engine.ptr, text.c_str(), &response);
      if (response != nullptr) {
        std::cout << response << "\n";
        stiso_string_free(response);
      }
      return status;
    } else {
      std::cerr << app.help() << "\n";
      return STISO_ERR_USAGE;
    }
    return dispatch(engine, request);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return STISO_ERR_USAGE;
  }
}
