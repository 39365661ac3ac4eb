#include "tetra/cli.hpp"

namespace tetra::cli {

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result;
  j["provenance"] = provenance;
  j["status"] = status;
  j["code"] = code;
  j["message"] = message;
  return j;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

Report Report::from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.result = j.at("result");
  r.provenance = j.at("provenance").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.code = j.at("code").get<int>();
  r.message = j.at("message").get<std::string>();
  return r;
}

Report Report::parse(const std::string& text) { return from_json(nlohmann::json::parse(text)); }

}  // namespace tetra::cli
