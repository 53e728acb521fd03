#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "json.hpp"
#include "qcorr/mapping.h"
#include "qcorr/rng.h"
#include "qcorr/states.h"
#include "qcorr/tensor.h"

using namespace qcorr;

TEST_CASE("two-qubit registry: 15 rows, one negative sign, none corrected") {
  const auto& reg = MappingRegistry::two_qubit();
  REQUIRE(reg.entries().size() == 15);
  for (const auto& e : reg.entries()) {
    CHECK_FALSE(e.corrected);
    if (e.word == std::vector<int>{1, 3}) {
      CHECK(e.sign == -1);
    } else {
      CHECK(e.sign == 1);
    }
  }
  CHECK(reg.entry({3, 3}).sequence == std::vector<std::string>{"CNOT12"});
  CHECK(reg.entry({3, 0}).sequence.empty());
  CHECK(reg.entry({3, 0}).readout == 0);
  CHECK(reg.entry({0, 2}).readout == 1);
}

TEST_CASE("three-qubit registry: full word coverage, three corrected rows") {
  const auto& reg = MappingRegistry::three_qubit();
  REQUIRE(reg.entries().size() == 63);
  std::set<std::vector<int>> words;
  std::set<std::string> corrected;
  for (const auto& e : reg.entries()) {
    words.insert(e.word);
    CHECK(e.sign == 1);
    if (e.corrected) corrected.insert(e.label);
    // readout is the last non-identity qubit
    std::size_t last = 0;
    for (std::size_t q = 0; q < 3; ++q)
      if (e.word[q] != 0) last = q;
    CHECK(e.readout == last);
  }
  CHECK(words.size() == 63);
  CHECK(corrected == std::set<std::string>{"B12", "B16", "B31"});

  CHECK(reg.entry({0, 3, 0}).readout == 1);
  CHECK(reg.entry({0, 3, 0}).sequence.empty());
  CHECK(reg.entry({1, 0, 0}).sequence == std::vector<std::string>{"Ybar1"});
  CHECK(reg.entry({1, 3, 3}).sequence ==
        std::vector<std::string>{"CNOT23", "CNOT12", "Ybar1"});
}

TEST_CASE("mapped readout equals the direct expectation on random states") {
  Rng rng(314);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix rho2 = haar_random_pure(2, rng).density();
    for (const auto& e : MappingRegistry::two_qubit().entries()) {
      const double direct = expectation(rho2, pauli_word(e.word));
      CHECK(std::abs(expectation_via_mapping(rho2, e.word) - direct) < 1e-9);
    }
    const CMatrix rho3 = haar_random_pure(3, rng).density();
    for (const auto& e : MappingRegistry::three_qubit().entries()) {
      const double direct = expectation(rho3, pauli_word(e.word));
      CHECK(std::abs(expectation_via_mapping(rho3, e.word) - direct) < 1e-9);
    }
  }
}

TEST_CASE("catalog spot values through the mapping path") {
  CHECK(std::abs(expectation_via_mapping(bell(2).density(), {1, 1}) + 1.0) < 1e-12);
  CHECK(std::abs(expectation_via_mapping(sep().density(), {3, 3, 3}) - 1.0) < 1e-12);
  CHECK(std::abs(expectation_via_mapping(w().density(), {1, 1, 3}) - 2.0 / 3.0) <
        1e-12);
  CHECK(std::abs(expectation_via_mapping(ghz().density(), {1, 1, 1}) - 1.0) < 1e-12);
}

TEST_CASE("unregistered words and bad tokens are rejected") {
  CHECK_THROWS(expectation_via_mapping(CMatrix::identity(4), {0, 0}));
  CHECK_THROWS(MappingRegistry::three_qubit().entry({0, 0, 0}));
  CHECK_THROWS(mapping_gate("Q1", 2));
}

TEST_CASE("registry dump round-trips as JSON") {
  const auto parsed = nlohmann::json::parse(registry_json(MappingRegistry::three_qubit()));
  CHECK(parsed["qubits"] == 3);
  REQUIRE(parsed["rows"].size() == 63);
  int corrected = 0;
  for (const auto& row : parsed["rows"]) corrected += row["corrected"].get<bool>() ? 1 : 0;
  CHECK(corrected == 3);

  const auto two = nlohmann::json::parse(registry_json(MappingRegistry::two_qubit()));
  int negative = 0;
  for (const auto& row : two["rows"])
    if (row["sign"].get<int>() == -1) {
      ++negative;
      CHECK(row["word"] == "xz");
    }
  CHECK(negative == 1);
}
