#pragma once

#include <stdexcept>
#include <string>

namespace dsort {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ties in a sequence where distinct values are required.
class DuplicateValues : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// An oracle or exact engine was asked for an n above its configured bound.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class OutOfTableRange : public SizeLimitExceeded {
 public:
  using SizeLimitExceeded::SizeLimitExceeded;
};

class NotAPermutation : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class BoxOutsideShape : public Error {
 public:
  using Error::Error;
};

}  // namespace dsort
