// Copyright 2026 The betgames Authors
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

#ifndef BETGAMES_ERRORS_HPP
#define BETGAMES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace betgames {

// Raised on malformed documents and on violated preconditions of the public
// operations. `locus` is a JSON-pointer-style path into the offending input
// ("" when the error is not tied to a document location).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string message, std::string locus = "")
      : std::runtime_error(locus.empty() ? message : locus + ": " + message),
        locus_(std::move(locus)) {}

  const std::string& locus() const { return locus_; }

 private:
  std::string locus_;
};

}  // namespace betgames

#endif  // BETGAMES_ERRORS_HPP
