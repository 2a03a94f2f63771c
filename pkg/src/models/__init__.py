from .schemas import ElementFile, ModuleFile, ScenarioFile, SpecFile, SublatticeFile, VectorFile

__all__ = ["ElementFile", "ModuleFile", "ScenarioFile", "SpecFile", "SublatticeFile", "VectorFile"]
