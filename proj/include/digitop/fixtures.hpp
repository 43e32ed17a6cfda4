#pragma once

#include <map>
#include <string>
#include <vector>

#include "digitop/lattice.hpp"

namespace digitop {

// One named expectation of a fixture, with the value the library computed.
struct FixtureCheck {
  std::string name;
  bool expected = false;
  bool actual = false;
  bool ok() const { return expected == actual; }
};

struct FixtureReport {
  std::string fixture;
  std::vector<FixtureCheck> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

// Built-in payloads reproducing the counterexamples and worked instances the
// library's theorems are tested against.
std::vector<std::string> fixture_names();
FixtureReport run_fixture(const std::string& name);
std::vector<FixtureReport> run_all_fixtures();

// Named images usable as "ref" strings in the JSON schemas.
const std::map<std::string, DigitalImage>& builtin_images();

}  // namespace digitop
