#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "frkt/asymptotics.hpp"

namespace frkt::cli {

// args excludes the program name. Exit codes: 0 ok, 1 library error, 2 usage or config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a+bi", "a-bi", "bi", "a", "i"; throws DomainError on anything else.
cplx parse_complex(const std::string& text);

// Applies a JSON config object onto s; unknown or mistyped fields raise ConfigError naming the field.
void apply_config_json(const std::string& text, asym::Settings& s);

}  // namespace frkt::cli
