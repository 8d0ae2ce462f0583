# external package imports
import os, configparser
from configparser import NoSectionError, NoOptionError

# absolute module imports
from advopt.exceptions import (ConfigMissingFileError, ConfigMissingSectionError, ConfigMissingPropertyError,
        ConfigPropertyWrongFormatError, SchemaError)

# local module imports
from . import rationals

class SettingsReader(object):
    """
    Wrapper class for ConfigParser with added functionality.

    Every getter takes a default. If the default is None, a missing section raises ConfigMissingSectionError and a
    missing property raises ConfigMissingPropertyError.
    """

    def __init__(self, file_path = None):
        """
        Creates a new SettingsReader.

        Args:
            file_path       - Local path to the ".ini" file to read into this SettingsReader. If None, an empty
                    SettingsReader is made and every getter falls back to its default.

        Returns:
            A new SettingsReader object.
        """

        self.configparser = configparser.RawConfigParser(allow_no_value=False)

        if file_path is not None:
            if not os.path.isfile(file_path):
                raise ConfigMissingFileError(file_path)

            self.configparser.read(file_path)

        self.file_path = file_path

    def get_file_path(self):
        """
        Gets the file path of this SettingsReader, or None if it was not read from a file.
        """
        return self.file_path

    def has_section(self, section):
        return self.configparser.has_section(section)

    def set(self, section, prop, value):
        """
        Sets the value of a property in a section, creating the section if needed.

        Args:
            section         - The section of the property to set.
            prop            - The property to set.
            value           - The value to set the property to, will be stored as a string.

        Returns:
            None.
        """

        if not self.configparser.has_section(section):
            self.configparser.add_section(section)
        self.configparser.set(section, prop, str(value))

    def _lookup(self, getter, section, prop, default):
        try:
            return getter(section, prop)
        except NoSectionError:
            if default is None:
                raise ConfigMissingSectionError(self.file_path, section, prop) from None
            return default
        except NoOptionError:
            if default is None:
                raise ConfigMissingPropertyError(self.file_path, section, prop) from None
            return default

    def get(self, section, prop, default = None):
        """
        Gets the value of a field as a string.

        Args:
            section         - The section of the settings file to look in.
            prop            - The property of the section to look for.
            default         - Returned if the section or property is undefined.

        Return:
            The value of the given property as a string.
        """
        return self._lookup(self.configparser.get, section, prop, default)

    def getboolean(self, section, prop, default = None):
        """
        Gets the value of a field as a boolean.
        """
        try:
            return self._lookup(self.configparser.getboolean, section, prop, default)
        except ValueError:
            raise ConfigPropertyWrongFormatError(self.file_path, section, prop, self.get(section, prop),
                    "true or false") from None

    def getint(self, section, prop, default = None):
        """
        Gets the value of a field as an int.
        """
        try:
            return self._lookup(self.configparser.getint, section, prop, default)
        except ValueError:
            raise ConfigPropertyWrongFormatError(self.file_path, section, prop, self.get(section, prop),
                    "an integer") from None

    def getrational(self, section, prop, default = None):
        """
        Gets the value of a field as an exact rational.

        Args:
            section         - The section of the settings file to look in.
            prop            - The property of the section to look for.
            default         - Returned if the section or property is undefined.

        Return:
            The value as an int or Fraction. Floats such as "0.5" are rejected, write "1/2" instead.
        """
        string = self.get(section, prop, None if default is None else "")
        if string == "":
            return default
        try:
            return rationals.parse_rational(string, self.file_path)
        except SchemaError:
            raise ConfigPropertyWrongFormatError(self.file_path, section, prop, string, "a rational such as 1/2") from None

    def getlist(self, section, prop, type = str, default = None):
        """
        Gets the value of a field as a list of elements of the given type. This list can be multi-dimensional.

        Args:
            section         - The section of the settings file to look in.
            prop            - The property of the section to look for.
            type            - The type to cast each element of the list to, default is str.
            default         - Returned if the section or property is undefined.

        Return:
            The value of the given property as a possibly multi-dimensional list of the given type.
        """

        try:
            string = self.get(section, prop)
        except (ConfigMissingSectionError, ConfigMissingPropertyError):
            if default is None:
                raise
            return default

        try:
            return parse_array(string, type)
        except (ValueError, SchemaError):
            raise ConfigPropertyWrongFormatError(self.file_path, section, prop, string,
                    "a bracketed, comma separated list") from None

def parse_array(string, type):
    """
    Transforms a string into a multidimensional list of the given type.

    Args:
        string              - The string to parse into a list, such as "[1, 2, [3, 4]]".
        type                - The type of the elements in the list.

    Returns:
        A possibly multi-dimensional list of the given type.
    """
    # open braces minus closed braces
    num_open_brackets = 0
    elements = []
    element = ""

    for character in string:

        if num_open_brackets == 1 and character == ",":
            elements.append(element)
            element = ""

        elif character == "[":
            if num_open_brackets != 0:
                element += "["
            num_open_brackets += 1

        elif character == "]":
            num_open_brackets -= 1
            if num_open_brackets != 0:
                element += "]"

        elif not character.isspace():
            element += character

    if num_open_brackets != 0:
        raise ValueError("unbalanced brackets in '{}'".format(string))

    if element != "":
        elements.append(element)

    return [parse_array(element, type) if "," in element or "[" in element or "]" in element else type(element)
            for element in elements]
