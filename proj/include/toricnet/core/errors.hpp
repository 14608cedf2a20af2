// Copyright 2026 The toricnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORICNET_CORE_ERRORS_HPP
#define TORICNET_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toricnet {

/// Input that is well formed but outside an operation's mathematical domain
/// (e.g. a network that is not weakly reversible). Distinct from malformed
/// input and from internal failures.
class DomainRefusal : public std::runtime_error {
public:
    DomainRefusal(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(detail) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

/// Malformed user input (syntax, schema, or value errors).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace toricnet

#endif  // TORICNET_CORE_ERRORS_HPP
