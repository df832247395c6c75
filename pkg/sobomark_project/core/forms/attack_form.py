from django import forms

from core.models.attack import AttackKind


class AttackForm(forms.Form):
    attack = forms.ChoiceField(choices=AttackKind.choices)
    param = forms.FloatField(min_value=0)
    seed = forms.IntegerField(min_value=0, required=False)

    def clean_seed(self):
        seed = self.cleaned_data.get('seed')
        return 0 if seed is None else seed
