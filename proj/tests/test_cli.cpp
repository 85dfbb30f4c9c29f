#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string command = std::string(TIGHTCOUNT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("expand command") {
  auto r = run("expand 5 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[-2,-3], r=3, s=2") != std::string::npos);
  CHECK(r.output.find("OK") != std::string::npos);

  CHECK(run("expand 1 1").output.find("[-1], r=1, s=1") != std::string::npos);
  CHECK(run("expand 2 1").output.find("[-2], r=2, s=1") != std::string::npos);

  // invalid slope: usage error with message
  auto bad = run("expand 4 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("coprime") != std::string::npos);
}

TEST_CASE("count command") {
  auto r = run("count 1 1 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= 1") != std::string::npos);

  auto both = run("count 2 5 3 --method both");
  CHECK(both.exit_code == 0);
  CHECK(both.output.find("8 (closed), 8 (recurrence), OK") !=
        std::string::npos);

  auto c4 = run("count 4 1 1");
  CHECK(c4.output.find("= 14") != std::string::npos);

  auto none = run("count 2 0 1");
  CHECK(none.exit_code == 1);
  CHECK(none.output.find("no tight contact structures") != std::string::npos);

  CHECK(run("count 2 5 3 --method bogus").exit_code == 2);
  CHECK(run("count").exit_code == 2);
}

TEST_CASE("table command") {
  auto csv = run("table --nmax 2 --pmax 3 --format csv");
  CHECK(csv.exit_code == 0);
  std::istringstream lines(csv.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,p,q,r,s,count,method");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  // p asc, q asc, n asc over slopes (1,1), (2,1), (3,1), (3,2)
  REQUIRE(rows.size() == 8);
  CHECK(rows[0] == "1,1,1,1,1,1,both");
  CHECK(rows[1] == "2,1,1,1,1,2,both");
  CHECK(rows[2] == "1,2,1,2,1,2,both");
  CHECK(rows[3] == "2,2,1,2,1,6,both");
  CHECK(rows[4] == "1,3,1,3,2,3,both");
  CHECK(rows[6] == "1,3,2,2,1,2,both");

  // identical invocations are byte-identical
  CHECK(run("table --nmax 2 --pmax 3 --format csv").output == csv.output);

  // json mirrors the record fields and validates against the schema
  auto json_run = run("table --nmax 2 --pmax 2 --format json");
  CHECK(json_run.exit_code == 0);
  auto doc = nlohmann::json::parse(json_run.output);
  REQUIRE(doc.contains("records"));
  REQUIRE(doc["records"].is_array());
  REQUIRE(doc["records"].size() == 4);
  const auto& row = doc["records"][2];
  CHECK(row["n"] == 1);
  CHECK(row["p"] == 2);
  CHECK(row["q"] == 1);
  CHECK(row["r"] == "2");
  CHECK(row["s"] == "1");
  CHECK(row["count"] == "2");
  CHECK(row["method"] == "both");
}

namespace {

// Minimal structural validator for the subset of JSON Schema the shipped
// schemas use: type, required, properties, items, enum.
bool schema_valid(const nlohmann::json& node, const nlohmann::json& schema) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    if (type == "object" && !node.is_object()) return false;
    if (type == "array" && !node.is_array()) return false;
    if (type == "string" && !node.is_string()) return false;
    if (type == "integer" && !node.is_number_integer()) return false;
    if (type == "boolean" && !node.is_boolean()) return false;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) {
      if (node == option) found = true;
    }
    if (!found) return false;
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      if (!node.contains(key.get<std::string>())) return false;
    }
  }
  if (schema.contains("properties") && node.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (node.contains(key) && !schema_valid(node[key], sub)) return false;
    }
  }
  if (schema.contains("items") && node.is_array()) {
    for (const auto& item : node) {
      if (!schema_valid(item, schema["items"])) return false;
    }
  }
  return true;
}

nlohmann::json load_schema(const std::string& name) {
  std::ifstream schema_file(std::string(TIGHTCOUNT_SOURCE_DIR) +
                            "/docs/schema/" + name);
  REQUIRE(schema_file.good());
  return nlohmann::json::parse(schema_file);
}

}  // namespace

TEST_CASE("table json validates against the shipped schema") {
  auto json_run = run("table --nmax 3 --pmax 4 --format json");
  REQUIRE(json_run.exit_code == 0);
  auto doc = nlohmann::json::parse(json_run.output);
  CHECK(schema_valid(doc, load_schema("table.schema.json")));
}

TEST_CASE("verify json validates against the shipped schema") {
  auto r = run("verify --suite ncf --nmax 40");
  REQUIRE(r.exit_code == 0);
  auto last_line = r.output.substr(r.output.rfind("\n{") + 1);
  auto doc = nlohmann::json::parse(last_line);
  CHECK(schema_valid(doc, load_schema("verify.schema.json")));
}

TEST_CASE("verify command") {
  auto r = run("verify --suite kaplansky --nmax 6");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("suite kaplansky") != std::string::npos);
  CHECK(r.output.find("result: pass") != std::string::npos);
  // machine-readable summary on the last line
  auto last_line = r.output.substr(r.output.rfind("\n{") + 1);
  auto doc = nlohmann::json::parse(last_line);
  CHECK(doc["all_pass"] == true);

  CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("trace command") {
  auto r = run("trace 2 1 1 --sites 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("outcome: DecreaseBy2") != std::string::npos);
  CHECK(r.output.find("2x(-1,1)") != std::string::npos);

  auto twist = run("trace 1 5 3 --sites 1:E:a");
  CHECK(twist.exit_code == 0);
  CHECK(twist.output.find("outcome: DehnTwist") != std::string::npos);

  // attach, then attach the upside-down bypass: net effect is trivial
  auto back = run("trace 1 5 3 --sites 1:E:a,1:I:a");
  CHECK(back.exit_code == 0);
  CHECK(back.output.find("net effect: trivial") != std::string::npos);

  auto adjacent = run("trace 2 2 1 --sites 1:E:a,6:E:a");
  CHECK(adjacent.exit_code == 1);
  CHECK(adjacent.output.find("trivial components:") != std::string::npos);
  CHECK(adjacent.output.find("none of the four cases") != std::string::npos);

  CHECK(run("trace 1 5 3 --sites banana").exit_code == 2);
  CHECK(run("trace 1 5 3 --sites 99").exit_code == 2);
}

TEST_CASE("out file option") {
  std::string path = "/tmp/tightcount_cli_test_out.txt";
  std::remove(path.c_str());
  auto r = run("expand 5 3 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::stringstream contents;
  contents << in.rdbuf();
  CHECK(contents.str().find("[-2,-3], r=3, s=2") != std::string::npos);
  std::remove(path.c_str());
}
