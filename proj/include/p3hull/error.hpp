#pragma once

#include <stdexcept>
#include <string>

namespace p3hull {

// Base for every library failure. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class InvalidPermutation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidGraph : public Error {
public:
    using Error::Error;
};

class ExceedsCapacity : public Error {
public:
    using Error::Error;
};

class NotAForest : public Error {
public:
    using Error::Error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

class PathConditionUnmet : public Error {
public:
    using Error::Error;
};

}  // namespace p3hull
