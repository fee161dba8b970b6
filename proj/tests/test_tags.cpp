// Copyright 2026 The Modality Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include "modality/tags.hpp"

using namespace modality;

TEST_CASE("tag grammar") {
  auto t = parse_tag("S-plans_goals");
  REQUIRE(t);
  CHECK(t->prefix == 'S');
  CHECK(t->role == TagRole::Trigger);
  CHECK(t->label == "plans_goals");

  CHECK(parse_tag("O")->role == TagRole::Outside);
  CHECK(parse_tag("H")->role == TagRole::Head);
  CHECK(parse_tag("B")->role == TagRole::Trigger);
  CHECK(parse_tag("I-E")->role == TagRole::Event);
  CHECK(parse_tag("B-T")->role == TagRole::JointTrigger);
  CHECK(parse_tag("B-T-priority")->label == "priority");

  for (const char* bad : {"", "X", "B-", "S-E", "E-T", "B-T-", "B-a-b", "Bx", "o"}) {
    INFO(bad);
    CHECK_FALSE(parse_tag(bad).has_value());
  }
}

TEST_CASE("format inverts parse") {
  for (const char* s : {"O", "H", "B", "I-knowledge", "E-world", "S-agent", "B-E", "I-E", "B-T",
                        "I-T-intentions"}) {
    CHECK(format_tag(*parse_tag(s)) == s);
  }
}

TEST_CASE("tag projection") {
  CHECK(project("S-PlansGoals", Granularity::Coarse) == "S-priority");
  CHECK(project("B-desires_wishes", Granularity::FineConflated) == "B-intentions");
  CHECK(project("E-knowledge", Granularity::Binary) == "E");
  CHECK(project("B-T-agent", Granularity::Coarse) == "B-T-plausibility");
  for (auto g : kGranularities) {
    CHECK(project("O", g) == "O");
    CHECK(project("H", g) == "H");
    CHECK(project("I-E", g) == "I-E");
  }
  CHECK_THROWS_AS(project("S", Granularity::Coarse), std::invalid_argument);
  CHECK_THROWS_AS(project("S-priority", Granularity::FineConflated), std::invalid_argument);
  CHECK_THROWS_AS(project("Q-x", Granularity::Coarse), std::invalid_argument);
}
