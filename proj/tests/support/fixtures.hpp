#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "partpat/checked.hpp"

namespace fixture {

struct Row {
  std::vector<std::string> patterns;
  std::vector<partpat::count_t> counts;  // from n = first
};

struct Table {
  int first = 0;
  std::vector<Row> rows;
};

// Format: "# ... from n = N" header, then "pat pat ... | c c c ..." per line.
inline Table load(const std::string& name) {
  std::ifstream in(std::string(PARTPAT_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  Table t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto at = line.rfind('=');
      if (at != std::string::npos) t.first = std::stoi(line.substr(at + 1));
      continue;
    }
    auto bar = line.find('|');
    Row r;
    std::istringstream a(line.substr(0, bar)), b(line.substr(bar + 1));
    for (std::string s; a >> s;) r.patterns.push_back(s);
    for (partpat::count_t c; b >> c;) r.counts.push_back(c);
    t.rows.push_back(r);
  }
  return t;
}

}  // namespace fixture
