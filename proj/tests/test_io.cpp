#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "ontosim/io.hpp"

using namespace ontosim;

TEST_SUITE("io") {

TEST_CASE("fixed six-decimal rendering") {
  CHECK(fmt6(0.5) == "0.500000");
  CHECK(fmt6(2.0 / 3.0) == "0.666667");
  CHECK(fmt6(-0.0) == "0.000000");
  CHECK(fmt6(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(fmt6(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(fmt6(-1.25) == "-1.250000");
}

TEST_CASE("csv quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("has space") == "has space");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("atomic write replaces and leaves no temp files") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ontosim-io-test";
  fs::create_directories(dir);
  fs::path target = dir / "out.txt";

  write_file_atomic(target.string(), "first");
  write_file_atomic(target.string(), "second");
  std::ifstream in(target);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "second");
  int entries = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  fs::remove_all(dir);
}

}  // TEST_SUITE
