// Copyright 2026 The idwmap Authors
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

#include "idwmap/error.hpp"

namespace idwmap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooManyDimensions: return "TooManyDimensions";
    case ErrorCode::IncompatibleColumnKind: return "IncompatibleColumnKind";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::IllegalFilterKind: return "IllegalFilterKind";
    case ErrorCode::InvalidFilter: return "InvalidFilter";
    case ErrorCode::UnknownDimension: return "UnknownDimension";
    case ErrorCode::IllegalReducer: return "IllegalReducer";
    case ErrorCode::NotGroupable: return "NotGroupable";
    case ErrorCode::NotScalarDimension: return "NotScalarDimension";
    case ErrorCode::NonPositiveWidth: return "NonPositiveWidth";
    case ErrorCode::NotHierarchyDimension: return "NotHierarchyDimension";
    case ErrorCode::UnknownSortColumn: return "UnknownSortColumn";
    case ErrorCode::InvalidQuery: return "InvalidQuery";
    case ErrorCode::NoTextDimension: return "NoTextDimension";
    case ErrorCode::NonFiniteInput: return "NonFiniteInput";
    case ErrorCode::InvalidBbox: return "InvalidBbox";
    case ErrorCode::InvalidZoom: return "InvalidZoom";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::TypeCoercionFailure: return "TypeCoercionFailure";
    case ErrorCode::LatLonOutOfRange: return "LatLonOutOfRange";
    case ErrorCode::NonPointGeometry: return "NonPointGeometry";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace idwmap
