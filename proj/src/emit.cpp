#include <sstream>

#include "json.hpp"
#include "partpat/enumeration.hpp"

namespace partpat {

using nlohmann::ordered_json;

std::string to_csv(const CountTable& t) {
  std::ostringstream o;
  if (t.refined.empty()) {
    o << "pattern,n,count\n";
    for (auto& [n, c] : t.entries) o << t.pattern.str() << ',' << n << ',' << c << '\n';
    return o.str();
  }
  o << "pattern,n,count,m\n";
  for (auto& [n, v] : t.refined)
    for (std::size_t m = 0; m < v.size(); ++m)
      if (v[m]) o << t.pattern.str() << ',' << n << ',' << v[m] << ',' << m << '\n';
  return o.str();
}

std::string to_json(const CountTable& t) {
  ordered_json j;
  j["pattern"] = t.pattern.str();
  j["rows"] = ordered_json::array();
  for (auto& [n, c] : t.entries) {
    ordered_json row;
    row["n"] = n;
    row["count"] = c;
    if (auto it = t.refined.find(n); it != t.refined.end()) {
      ordered_json bm = ordered_json::object();
      for (std::size_t m = 0; m < it->second.size(); ++m)
        if (it->second[m]) bm[std::to_string(m)] = it->second[m];
      row["by_blocks"] = bm;
    }
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const ClassReport& r) {
  std::ostringstream o;
  o << "# " << r.classes.size() << (r.classes.size() == 1 ? " class" : " classes") << "; size " << r.size << "; counts equal up to n = " << r.horizon
    << " (not a proof of equivalence)\n";
  o << "class,pattern,n,count\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    for (const auto& m : c.members)
      for (std::size_t j = 0; j < c.counts.size(); ++j)
        o << i + 1 << ',' << m.str() << ',' << r.size + 1 + static_cast<int>(j) << ',' << c.counts[j] << '\n';
  }
  return o.str();
}

std::string to_json(const ClassReport& r) {
  ordered_json j;
  j["class_count"] = r.classes.size();
  j["size"] = r.size;
  j["horizon"] = r.horizon;
  j["note"] = "classes share counts up to the horizon; equivalence is not proven";
  j["classes"] = ordered_json::array();
  for (const auto& c : r.classes) {
    ordered_json e;
    ordered_json mem = ordered_json::array();
    for (const auto& m : c.members) mem.push_back(m.str());
    e["members"] = mem;
    e["through_n"] = c.last_n;
    ordered_json counts = ordered_json::object();
    for (std::size_t j2 = 0; j2 < c.counts.size(); ++j2) counts[std::to_string(r.size + 1 + j2)] = c.counts[j2];
    e["counts"] = counts;
    j["classes"].push_back(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace partpat
