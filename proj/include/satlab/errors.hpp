#pragma once

#include <stdexcept>
#include <string>

namespace satlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error { public: using Error::Error; };
class SelfLoopError : public Error { public: using Error::Error; };
class CouplingError : public Error { public: using Error::Error; };
class ContainmentError : public Error { public: using Error::Error; };
class PreconditionError : public Error { public: using Error::Error; };
class SizeError : public Error { public: using Error::Error; };
class ApplicabilityError : public Error { public: using Error::Error; };
class ConstructionFailure : public Error { public: using Error::Error; };
class RangeError : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

}  // namespace satlab
