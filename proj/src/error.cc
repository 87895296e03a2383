// Copyright 2026 The Simpeval Authors.
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

#include "simpeval/error.h"

namespace simpeval {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kEmptyText: return "empty-text";
    case ErrorCode::kOutOfBounds: return "out-of-bounds";
    case ErrorCode::kUnknownDimension: return "unknown-dimension";
    case ErrorCode::kDegenerateInput: return "degenerate-input";
    case ErrorCode::kReferenceRequired: return "reference-required";
    case ErrorCode::kNoProbes: return "no-probes";
    case ErrorCode::kEmptyJoin: return "empty-join";
    case ErrorCode::kTransport: return "transport";
    case ErrorCode::kProtocol: return "protocol";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kFixtureMiss: return "fixture-miss";
    case ErrorCode::kCorruptStore: return "corrupt-store";
  }
  return "unknown";
}

}  // namespace simpeval
