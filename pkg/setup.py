from setuptools import setup, find_packages

setup(
       name="tnqc",
       version="0.1",
       packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
       package_data={"core.config": ["base.json"]},
       description="Tensor-network quantum circuits: wire cutting, variational classifiers and defect detection",
       python_requires=">=3.9",
       install_requires=[
           "numpy>=1.24",
           "networkx>=3.0",
           "rich>=13.3.5",
           "python-dotenv>=1.0.0",
           "jsonschema>=4.17.3",
       ],
       entry_points={"console_scripts": ["tnqc = cli.main:main"]},
   )
