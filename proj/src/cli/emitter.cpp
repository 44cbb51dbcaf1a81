#include "emitter.hpp"

namespace zgap::cli {

void Emitter::header(const std::string& command, const Json& args, const RunConfig& cfg,
                     const std::vector<std::string>& anchors) {
  Json h;
  h["record"] = "header";
  h["tool"] = "zgap";
  h["version"] = kVersion;
  h["command"] = command;
  h["args"] = args;
  h["config"] = config_json(cfg);
  h["anchors"] = anchors;
  if (fmt_ == OutputFormat::Json) {
    out_ << h.dump() << '\n';
  } else {
    out_ << "# " << h.dump() << '\n';
  }
}

std::string Emitter::cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void Emitter::record(const Json& r) {
  if (fmt_ == OutputFormat::Json) {
    out_ << r.dump() << '\n';
    return;
  }
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  if (keys != columns_) {
    columns_ = keys;
    for (std::size_t i = 0; i < keys.size(); ++i) out_ << (i ? "," : "") << keys[i];
    out_ << '\n';
  }
  std::size_t i = 0;
  for (auto it = r.begin(); it != r.end(); ++it, ++i) out_ << (i ? "," : "") << cell(it.value());
  out_ << '\n';
}

}  // namespace zgap::cli
