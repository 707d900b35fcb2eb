#ifndef FANOUH_ERROR_HPP
#define FANOUH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fanouh {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotALine : public Error {
public:
    using Error::Error;
};

class DegeneratePair : public Error {
public:
    using Error::Error;
};

class InconsistentPencil : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidAction : public Error {
public:
    using Error::Error;
};

} // namespace fanouh

#endif
