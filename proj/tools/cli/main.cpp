#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace charp::cli;
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    std::cout << usage();
    return args.empty() ? kExitError : kExitOk;
  }

  CommandResult result;
  bool json = false;
  try {
    Options options = parse_arguments(args);
    json = options.json;
    result.command = options.command;
    Session session = options.session ? load_session(*options.session) : Session{};
    result = execute(session, options);
  } catch (const std::exception& e) {
    result.status = Status::Error;
    result.exit_code = kExitError;
    result.message = e.what();
  }

  if (result.status == Status::Error) std::cerr << "charp: " << result.message << '\n';
  if (json) {
    std::cout << result.to_json().dump(2) << '\n';
  } else if (result.status != Status::Error) {
    std::cout << result.to_text();
  }
  return result.exit_code;
}
