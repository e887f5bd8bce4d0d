#ifndef YBE_ERROR_HPP_
#define YBE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace ybe {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed or out-of-domain input (bad parameters, bad tables).
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  //! A configured size cap was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace ybe

#endif  // YBE_ERROR_HPP_
