#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "maintlab/token.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(MAINTLAB_FIXTURE_DIR) + "/" + name;
}

inline maintlab::SourceUnit load_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return {name, "fixtures", "java", buffer.str()};
}

inline maintlab::SourceUnit java_unit(std::string text, std::string path = "Test.java") {
    return {std::move(path), "test", "java", std::move(text)};
}

}  // namespace testutil
