// Copyright 2026 qembed developers
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once
#include <stdexcept>
#include <string>

namespace qembed {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An argument is outside its documented range.
class DomainError : public Error {
  public:
    using Error::Error;
};

// A requested bipartite graph does not fit the target lattice.
class CapacityError : public Error {
  public:
    using Error::Error;
};

// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what, int line = 0) : Error(what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// An embedding cannot be constructed or used as requested.
class EmbeddingError : public Error {
  public:
    using Error::Error;
};

// A computation was refused because it exceeds a hard size limit.
class LimitError : public Error {
  public:
    using Error::Error;
};

}  // namespace qembed
