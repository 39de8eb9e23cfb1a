// Copyright 2026 The Randen Authors. All Rights Reserved.
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

#ifndef RANDEN_ERROR_HPP_
#define RANDEN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace randen {

// Mirrors randen_status in randen.h; the C API maps one to the other.
enum class ErrorCode {
  kInvalidArgument = 1,
  kSize = 2,
  kIo = 3,
  kNoHardware = 4,
  kMismatch = 5,
  kDomain = 6,
  kTimer = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace randen

#endif  // RANDEN_ERROR_HPP_
