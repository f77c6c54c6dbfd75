"""
Validation of YAML run definitions. Each entry of `required_fields` describes
how the matching entry of the definition is checked:

- a type: the value must have exactly this type
- a value: the value must be exactly this
- a callable: the value is converted with it (which raises on bad values)
- a list/tuple: any one of the choices, `None` among them makes the field
  optional
- `dict(requires=..., choices=...)`: the field is only valid (and then
  checked against `choices`) when the fields in `requires` validate, the
  special requirement `__is_set__` only asks for the other field to be given

A key `a|b` accepts either field (or both).
"""
import semver


class InvalidInputDefinition(Exception):
    pass


class MissingInputDefinition(InvalidInputDefinition):
    pass


def positive_int(value):
    if type(value) != int or value <= 0:
        raise InvalidInputDefinition(f"`{value}` isn't a positive integer")
    return value


def _check_conditional(input_params, f_name, f_option, check_field):
    requirements = f_option["requires"]
    satisfied = 0
    for f_name_reqd, f_option_reqd in requirements.items():
        if f_option_reqd == "__is_set__":
            if input_params.get(f_name_reqd) is None:
                raise InvalidInputDefinition(
                    f"For `{f_name}` == `{input_params.get(f_name)}` the"
                    f" `{f_name_reqd}` must be set"
                )
            satisfied += 1
            continue
        try:
            check_field(f_name_reqd, f_option_reqd)
        except InvalidInputDefinition:
            break
        satisfied += 1

    if satisfied == len(requirements):
        return check_field(f_name, f_option["choices"])
    if input_params.get(f_name) is not None:
        raise InvalidInputDefinition(
            f"`{f_name}` shouldn't be set unless the following requirements have"
            f" been satisfied: `{requirements}`"
        )
    return None


def validate_input(input_params, required_fields):
    """
    Checks all entries in `input_params` against the definition in
    `required_fields`, replacing values by their converted versions in place.
    Optional fields that weren't given are left out
    """

    def _check_field(f_name, f_option):
        if type(f_option) == dict:
            if "requires" not in f_option or "choices" not in f_option:
                raise NotImplementedError(
                    "A field validation given as a dictionary must contain the"
                    " keys `requires` and `choices`"
                )
            return _check_conditional(input_params, f_name, f_option, _check_field)

        missing_allowed = type(f_option) in [list, tuple] and None in f_option
        if missing_allowed and f_name not in input_params:
            return None
        if f_name not in input_params:
            raise MissingInputDefinition(f"Missing `{f_name}` field")

        value = input_params[f_name]
        if f_option is None:
            if value is None:
                return None
            raise InvalidInputDefinition(f"`{f_name}` isn't empty")

        if type(f_option) == type:
            if type(value) != f_option:
                raise InvalidInputDefinition(
                    f"Field `{f_name}` should have type {f_option.__name__}, but has"
                    f" type {type(value).__name__}"
                )
            return value

        if callable(f_option):
            try:
                return f_option(value)
            except (TypeError, ValueError) as ex:
                raise InvalidInputDefinition(f"Invalid value for `{f_name}`: {ex}")

        if type(f_option) in [list, tuple]:
            errors = []
            for choice in f_option:
                try:
                    return _check_field(f_name, choice)
                except InvalidInputDefinition as ex:
                    errors.append(str(ex))
            raise InvalidInputDefinition(
                f"`{value}` isn't a valid choice for `{f_name}`: {'; '.join(errors)}"
            )

        if isinstance(value, type(f_option)) and value == f_option:
            return f_option
        raise InvalidInputDefinition(
            f"`{f_name}` should be `{f_option}`, but is `{value}`"
        )

    checked_valid_fields = []
    for f_name, f_option in required_fields.items():
        if "|" in f_name:
            f_names = f_name.split("|")
            errors = []
            n_missing = 0
            for f_name in f_names:
                try:
                    new_val = _check_field(f_name, f_option)
                except MissingInputDefinition:
                    n_missing += 1
                    continue
                except InvalidInputDefinition as ex:
                    errors.append(str(ex))
                    continue
                if new_val is not None:
                    input_params[f_name] = new_val
                    checked_valid_fields.append(f_name)

            # `|` is an OR, so all but one of the fields may be missing
            if len(errors) > 0 or n_missing == len(f_names):
                raise InvalidInputDefinition(
                    "The following issues were found when trying to parse the"
                    f" values of {', '.join(f_names)}: {errors or 'all missing'}"
                )
        else:
            new_val = _check_field(f_name, f_option)
            if new_val is not None:
                input_params[f_name] = new_val
            elif f_name in input_params:
                del input_params[f_name]
            checked_valid_fields.append(f_name)

    if "version" in input_params:
        try:
            semver.VersionInfo.parse(str(input_params["version"]))
        except ValueError:
            raise InvalidInputDefinition(
                "Versioning labels should follow the semver convention"
                " (http://semver.org) of `MAJOR.MINOR.PATCH` (e.g. the first"
                " version you make might be `1.0.0`). The version is currently"
                f" given as `{input_params['version']}`."
            )
        checked_valid_fields.append("version")

    extra_fields = set(input_params.keys()).difference(checked_valid_fields)
    if len(extra_fields) > 0:
        raise InvalidInputDefinition(
            "Input definition has the following extra fields:"
            f" {', '.join(sorted(extra_fields))}"
        )
    return input_params
