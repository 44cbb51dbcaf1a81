#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zgap/cli.hpp"

namespace zgap::cli {

// Writes records as JSON lines or CSV. In CSV mode a header row is written
// whenever the key set changes; nested values are written as JSON text.
class Emitter {
 public:
  Emitter(std::ostream& out, OutputFormat fmt) : out_(out), fmt_(fmt) {}

  void header(const std::string& command, const Json& args, const RunConfig& cfg,
              const std::vector<std::string>& anchors);
  void record(const Json& r);
  OutputFormat format() const { return fmt_; }
  std::ostream& stream() { return out_; }

 private:
  static std::string cell(const Json& v);

  std::ostream& out_;
  OutputFormat fmt_;
  std::vector<std::string> columns_;
};

}  // namespace zgap::cli
