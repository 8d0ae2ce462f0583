import unittest, os, json

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.utils import files, settings_reader
from advopt.exceptions import FileExistsError, InvalidValueError

class TestFiles(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestFiles, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def setUpClass():
        TestFiles.output = os.path.join(os.path.dirname(os.path.abspath(__file__)), "output")
        TestFiles.dirdir = os.path.join(TestFiles.output, "reports", "delta")
        TestFiles.file = os.path.join(TestFiles.output, "bracket.json")
        TestFiles.file_backup1 = TestFiles.file + ".backup-1"
        TestFiles.file_backup2 = TestFiles.file + ".backup-2"
        TestFiles.deepfile = os.path.join(TestFiles.output, "some", "report", "path", "r_k.csv")

    def write(self, path, document):
        with open(path, "w") as file:
            json.dump(document, file)

    def read(self, path):
        with open(path, "r") as file:
            return json.load(file)

    def test_init_directory(self):

        self.assertEqual(files.init_directory(TestFiles.dirdir), TestFiles.dirdir)
        self.assertTrue(os.path.isdir(TestFiles.dirdir))
        self.assertEqual(files.init_directory(TestFiles.dirdir), TestFiles.dirdir)

        os.removedirs(TestFiles.dirdir)

        self.test_passed = True

    def test_init_file(self):

        self.assertEqual(files.init_file(TestFiles.file), TestFiles.file)
        self.assertFalse(os.path.isfile(TestFiles.file))

        self.write(TestFiles.file, {"lo": "1/2"})
        self.assertEqual(files.init_file(TestFiles.file), TestFiles.file)
        self.assertFalse(os.path.isfile(TestFiles.file))
        self.assertEqual(self.read(TestFiles.file_backup1), {"lo": "1/2"})

        self.write(TestFiles.file, {"lo": "2/3"})
        files.init_file(TestFiles.file)
        self.assertEqual(self.read(TestFiles.file_backup1), {"lo": "1/2"})
        self.assertEqual(self.read(TestFiles.file_backup2), {"lo": "2/3"})

        self.write(TestFiles.file, {"lo": "3/4"})
        self.assertEqual(files.init_file(TestFiles.file, files.OverwriteMethod.OVERWRITE), TestFiles.file)
        self.assertEqual(self.read(TestFiles.file), {"lo": "3/4"})

        with self.assertRaises(FileExistsError):
            files.init_file(TestFiles.file, files.OverwriteMethod.CRASH)

        self.assertEqual(files.init_file(TestFiles.file, files.OverwriteMethod.NONE), TestFiles.file)
        self.assertEqual(self.read(TestFiles.file), {"lo": "3/4"})

        self.assertEqual(files.init_file(TestFiles.deepfile), TestFiles.deepfile)
        self.assertTrue(os.path.isdir(os.path.dirname(TestFiles.deepfile)))

        with self.assertRaises(InvalidValueError):
            files.init_file(TestFiles.file, 8)

        os.remove(TestFiles.file)
        os.remove(TestFiles.file_backup1)
        os.remove(TestFiles.file_backup2)
        os.removedirs(os.path.dirname(TestFiles.deepfile))

        self.test_passed = True

    def test_overwrite_method_from_settings(self):

        settings = settings_reader.SettingsReader()
        self.assertEqual(files.OverwriteMethod.get_from_settings(settings), files.OverwriteMethod.BACKUP)

        settings.set("files", "overwrite_method", "Crash")
        self.assertEqual(files.OverwriteMethod.get_from_settings(settings), files.OverwriteMethod.CRASH)

        settings.set("files", "overwrite_method", "none")
        with self.assertRaises(InvalidValueError):
            files.OverwriteMethod.get_from_settings(settings)

        settings.set("files", "overwrite_method", "shred")
        with self.assertRaises(InvalidValueError):
            files.OverwriteMethod.get_from_settings(settings)

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestFiles)
