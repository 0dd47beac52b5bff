from rest_framework import serializers

from grid_atlas.atlas.enums import RelationStatus
from grid_atlas.atlas.enums import Symmetry
from grid_atlas.core.exceptions import InvalidGrid
from grid_atlas.core.exceptions import MultiComponent
from grid_atlas.grids.diagram import GridDiagram
from grid_atlas.grids.diagram import validate
from grid_atlas.grids.invariants import classical_invariants
from grid_atlas.search.enums import MergeRelation
from grid_atlas.search.enums import StabilizationSign


class DiagramSerializer(serializers.Serializer):
    x_row = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)
    o_row = serializers.ListField(child=serializers.IntegerField(min_value=0), allow_empty=False)

    def to_internal_value(self, data) -> GridDiagram:
        attrs = super().to_internal_value(data)
        try:
            return validate(attrs["x_row"], attrs["o_row"])
        except InvalidGrid as exc:
            raise serializers.ValidationError(str(exc)) from exc


class ClassEntrySerializer(serializers.Serializer):
    label = serializers.CharField()
    representative = DiagramSerializer()
    tb = serializers.IntegerField()
    r = serializers.IntegerField()
    sl = serializers.IntegerField()
    ruling = serializers.CharField()
    theta = serializers.BooleanField()
    symmetries = serializers.DictField(child=serializers.ChoiceField(choices=RelationStatus.choices))

    def validate_symmetries(self, value: dict) -> dict:
        unknown = sorted(set(value) - set(Symmetry.values))
        if unknown:
            error_message = f"Unknown symmetry relations: {', '.join(unknown)}"
            raise serializers.ValidationError(error_message)
        return {Symmetry(key): RelationStatus(status) for key, status in value.items()}

    def validate(self, attrs: dict) -> dict:
        stored = (attrs["tb"], attrs["r"], attrs["sl"])
        try:
            invariants = classical_invariants(attrs["representative"])
        except MultiComponent as exc:
            raise serializers.ValidationError(str(exc)) from exc
        computed = (invariants.tb, invariants.r, invariants.sl)
        if stored != computed:
            error_message = (
                f"Class {attrs['label']} stores (tb, r, sl) = {stored} "
                f"but its representative has {computed}"
            )
            raise serializers.ValidationError(error_message)
        return attrs


class MergeRowSerializer(serializers.Serializer):
    tb = serializers.IntegerField()
    r = serializers.IntegerField()
    sign = serializers.ChoiceField(choices=StabilizationSign.choices)
    groups = serializers.ListField(
        child=serializers.ListField(child=serializers.CharField(), allow_empty=False),
        allow_empty=False,
    )
    separators = serializers.ListField(child=serializers.ChoiceField(choices=MergeRelation.choices))
    text = serializers.CharField(read_only=True)

    def validate(self, attrs: dict) -> dict:
        if len(attrs["separators"]) != len(attrs["groups"]) - 1:
            error_message = "A merge row needs exactly one separator between consecutive groups"
            raise serializers.ValidationError(error_message)
        return attrs


class TransverseClassSerializer(serializers.Serializer):
    sl = serializers.IntegerField()
    members = serializers.ListField(child=serializers.CharField())
    theta = serializers.BooleanField()


class AtlasRecordSerializer(serializers.Serializer):
    knot = serializers.CharField()
    arc_index = serializers.IntegerField(min_value=0)
    max_tb = serializers.IntegerField()
    classes = ClassEntrySerializer(many=True)
    merge_table = MergeRowSerializer(many=True, required=False)
    transverse_classes = TransverseClassSerializer(many=True, required=False)
    nonsimple_candidate = serializers.BooleanField(required=False)
    proven_nonsimple = serializers.BooleanField(read_only=True)
    mfw_bound = serializers.IntegerField(allow_null=True, required=False)

    def validate(self, attrs: dict) -> dict:
        classes = attrs["classes"]
        if not classes:
            return attrs

        max_tb = max(entry["tb"] for entry in classes)
        if attrs["max_tb"] != max_tb:
            error_message = f"max_tb is {attrs['max_tb']} but the classes reach tb={max_tb}"
            raise serializers.ValidationError(error_message)

        arc_index = min(entry["representative"].size for entry in classes)
        if attrs["arc_index"] != arc_index:
            error_message = f"arc_index is {attrs['arc_index']} but the smallest representative has size {arc_index}"
            raise serializers.ValidationError(error_message)

        labels = [entry["label"] for entry in classes]
        if len(set(labels)) != len(labels):
            error_message = "Class labels must be unique within a record"
            raise serializers.ValidationError(error_message)
        return attrs
