#!/usr/bin/env python3
"""Generates the checked-in test fixtures (run once; outputs are committed).

Span offsets are Unicode scalar values, which Python string indexing
matches. Annotation spans are located by substring search so the fixtures
stay consistent if the texts are edited.
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
FIX = os.path.join(HERE, "..", "fixtures")

SEV_RANK = {"neutral": 0, "minor": 1, "major": 2, "critical": 3}


def dump(obj):
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


DOCS = [
    # (doc_id, length, [turns])
    ("d01", "short", ["今天去哪吃的？", "我在那滴吃的饭。。", "哈哈你打错字了吧"]),
    ("d02", "short", ["这照片拍得真好", "…我只是为了凹造型人艰勿拆", "好好好，不拆不拆"]),
    ("d03", "short", ["你觉得我能赢吗？", "没事儿，肯定能赢啊！", "那我就放心了"]),
    ("d04", "short", ["你用过新出的派蒙手机吗？", "用过，屏幕很不错", "我也想买一个"]),
    ("d05", "short", ["群啊！今晚一起开黑不？", "来啊来啊，等我下班", "冲！"]),
    ("d06", "short", ["昨天的比赛看了吗？", "看了，最后绝杀太刺激了", "可惜我错过了直播"]),
    ("d07", "long", ["周末打算去爬山，你来不？", "爬哪座山啊？", "香山，看红叶正是时候", "行啊，几点出发？",
                      "早上七点，山脚下集合", "这么早，我怕起不来", "那我到时候给你打电话", "好，那就说定了"]),
    ("d08", "long", ["新赛季的皮肤也太帅了吧", "是吗？我还没看", "特效拉满，手感也好", "多少钱？",
                      "首周打折，八十八", "有点小贵啊", "值得的，信我", "行吧，冲了"]),
    ("d09", "long", ["我家猫又把花瓶打碎了", "哈哈哈猫主子威武", "这已经是第三个了", "你可以买个塑料的",
                      "塑料的不好看啊", "那就把花瓶放高点", "放多高它都能跳上去", "那没办法了，认命吧"]),
    ("d10", "long", ["下周公司团建去哪啊？", "听说是去郊区的农家乐", "又是农家乐，没新意", "总比加班强吧",
                      "那倒是，哈哈", "听说还要做拓展训练", "不会又是信任背摔吧", "大概率跑不了"]),
]

MT = {
    ("d01", "gpt-4"): ["Where did you eat today?", "I ate at that place..", "Haha, you made a typo, right?"],
    ("d01", "llama3"): ["Where did you eat today?", "I had my meal in that place..", "Haha you typed it wrong, right?"],
    ("d01", "deepl"): ["Where did you eat today?", "I ate my meal in that drip..", "Haha you made a typo didn't you"],
    ("d01", "nmt"): ["Where did you eat today?", "I had my meals in that drop....", "Ha ha you hit the wrong word."],

    ("d02", "gpt-4"): ["This photo is really well taken", "...I just did it for the pose, life is hard, don't judge", "Okay okay, I won't judge"],
    ("d02", "llama3"): ["This photo turned out great", "...I was just striking a pose, ren jian wu chai", "Fine fine, no judging"],
    ("d02", "deepl"): ["This photo is really good", "I just for the sake of the shape of the people hard not to break down", "Good good good, no demolition no demolition"],
    ("d02", "nmt"): ["The photo was taken very well", "... I just to concave shape people hard do not tear down", "Good, good, no tearing down."],

    ("d03", "gpt-4"): ["Do you think I can win?", "Don't worry, you'll definitely win!", "Then I'm relieved"],
    ("d03", "llama3"): ["Do you think I can win?", "No problem, definitely can win!", "Then I am relieved"],
    ("d03", "deepl"): ["Do you think I can win?", "It's okay. I'm sure they'll win!", "Then I'm relieved."],
    ("d03", "nmt"): ["Do you think I can win?", "It's okay, sure to win!", "That puts my mind at ease."],

    ("d04", "gpt-4"): ["Have you used the new Paimon phone?", "Yes, the screen is quite nice", "I want to buy one too"],
    ("d04", "llama3"): ["Have you used the newly released Paimon phone?", "I have, the screen is great", "I also want to buy one"],
    ("d04", "deepl"): ["Have you used the new Pymont phone?", "Used it, the screen is very good", "I want to buy one too"],
    ("d04", "nmt"): ["Have you used the new send Mongolia cell phone?", "Used, screen is very good", "I also want to buy one."],

    ("d05", "gpt-4"): ["Guys! Wanna team up tonight?", "Sure sure, wait till I'm off work", "Let's go!"],
    ("d05", "llama3"): ["Group ah! Team up tonight?", "Come on come on, wait for me to get off work", "Rush!"],
    ("d05", "deepl"): ["Group ah! Tonight together open black?", "Come, wait for me to get off work", "Charge!"],
    ("d05", "nmt"): ["Group! Open black together tonight?", "Come and come, and so I get off work", "Rush!"],

    ("d06", "gpt-4"): ["Did you watch yesterday's match?", "I did, the last-second winner was so thrilling", "Too bad I missed the live stream"],
    ("d06", "llama3"): ["Did you watch the match yesterday?", "Watched, the final buzzer beater was exciting", "Pity I missed the livestream"],
    ("d06", "deepl"): ["Did you see yesterday's game?", "Saw it, the final kill was so exciting", "Too bad I missed the live broadcast"],
    ("d06", "nmt"): ["Did you watch the game yesterday?", "Look, the last must-kill is too exciting", "Unfortunately, I missed the live."],

    ("d07", "gpt-4"): ["I'm planning to go hiking this weekend, are you coming?", "Which mountain?", "Xiangshan, it's the perfect time for red leaves", "Sure, what time do we leave?", "Seven in the morning, meet at the foot of the mountain", "That early? I'm afraid I can't get up", "Then I'll call you when it's time", "Okay, it's settled then"],
    ("d07", "llama3"): ["Planning to climb a mountain this weekend, you coming?", "Which mountain are we climbing?", "Fragrant Hills, it is just the time to see red leaves", "Okay, what time do we set off?", "Seven am, gather at the foot of the mountain", "So early, I am afraid I cannot get up", "Then I will call you then", "Good, it is settled"],
    ("d07", "deepl"): ["I'm going hiking this weekend, are you in?", "Which mountain to climb?", "Xiangshan, it's the right time to see the red leaves", "Okay, what time do you leave?", "7:00 a.m., meet at the bottom of the hill", "So early, I'm afraid I won't get up", "I'll call you then", "Okay, deal"],
    ("d07", "nmt"): ["Weekend plans to climb the mountain, you come not?", "Climb which mountain ah?", "Xiangshan, see the red leaves is the time", "Row ah, a few points out?", "Seven o'clock in the morning, the foot of the mountain assembly", "So early, I am afraid I can not get up", "Then I will call you at that time", "Well, then it is settled"],

    ("d08", "gpt-4"): ["The new season skin is so cool", "Really? I haven't seen it yet", "The effects are maxed out and it feels great", "How much is it?", "First-week discount, eighty-eight", "A bit pricey", "It's worth it, trust me", "Fine, I'll get it"],
    ("d08", "llama3"): ["The new season skin is too handsome", "Is it? I have not seen it", "Special effects pulled full, feel is also good", "How much money?", "First week discount, eighty-eight", "A little expensive ah", "Worth it, believe me", "Okay, rushed"],
    ("d08", "deepl"): ["The new season's skin is so handsome", "Yeah? I haven't seen it", "Special effects pull full, feel is also good", "How much?", "First week discount, eighty-eight", "A little expensive", "Worth it, trust me", "Okay, rush"],
    ("d08", "nmt"): ["The new season of skin is also too handsome", "Yes? I have not seen", "Special effects pull full, the hand feeling is also good", "How much money?", "The first week discount, eighty-eight", "A little expensive ah", "Worth, letter I", "Line, rushed"],

    ("d09", "gpt-4"): ["My cat broke the vase again", "Hahaha, his majesty the cat is mighty", "This is already the third one", "You could buy a plastic one", "Plastic ones don't look good", "Then put the vase somewhere higher", "No matter how high, it can jump up there", "Then there's no way, accept your fate"],
    ("d09", "llama3"): ["My cat broke the vase again", "Hahaha the cat master is mighty", "This is the third one already", "You can buy a plastic one", "Plastic is not good looking ah", "Then put the vase higher", "However high it is put, it can jump up", "Then there is no way, accept fate"],
    ("d09", "deepl"): ["My cat broke the vase again", "Hahaha cat master majestic", "This is the third one", "You can buy a plastic one", "Plastic is not pretty ah", "Then put the vase higher", "It can jump on it no matter how high", "There is no way, recognize fate"],
    ("d09", "nmt"): ["My family cat and broke the vase", "Ha ha ha cat Lord mighty", "This is already the third", "You can buy a plastic", "Plastic is not good-looking ah", "Then the vase put higher", "Put how high it can jump up", "That no way, recognize life"],

    ("d10", "gpt-4"): ["Where is the company team building next week?", "I heard it's a farm stay in the suburbs", "A farm stay again, nothing new", "Better than working overtime though", "That's true, haha", "I heard there will be team training too", "Not the trust fall again, right?", "Most likely we can't escape it"],
    ("d10", "llama3"): ["Where is the company team building going next week?", "Heard it is a farmhouse fun in the suburbs", "Farmhouse fun again, no new ideas", "Better than overtime anyway", "That is true, haha", "Heard we also have to do expansion training", "Not trust back fall again?", "High probability cannot run away"],
    ("d10", "deepl"): ["Where is the company's league building next week?", "I heard it's a farmhouse in the suburbs", "Farmhouse again, no new ideas", "Better than working overtime", "That's right, haha", "I heard we have to do expansion training", "Not another trust backfall", "High probability of not running away"],
    ("d10", "nmt"): ["Where does the company group build go next week?", "It is said that the farmhouse to the suburbs", "Again the farmhouse, no new meaning", "Always better than overtime", "That is, ha ha", "It is said to do expansion training", "Not and is the trust back fall", "Big probability run not"],
}

# (doc, system, turn, needle, label, severity, annotator)
GOLD_CHAT = [
    ("d01", "nmt", 1, "in that drop", "AmbiguityAndDisambiguation", "major", "a1"),
    ("d01", "nmt", 2, "hit the wrong word", "Mistranslation", "minor", "a1"),
    ("d01", "deepl", 1, "in that drip", "AmbiguityAndDisambiguation", "major", "a1"),
    ("d02", "deepl", 1, "of the people hard not to break down", "BuzzwordOrLoanword", "major", "a1"),
    ("d02", "deepl", 2, "no demolition no demolition", "BuzzwordOrLoanword", "major", "a2"),
    ("d02", "nmt", 1, "people hard do not tear down", "BuzzwordOrLoanword", "major", "a1"),
    ("d02", "nmt", 1, "concave shape", "Mistranslation", "minor", "a1"),
    ("d03", "deepl", 1, "they", "DialogueInconsistency", "major", "a1"),
    ("d03", "llama3", 1, "definitely can win", "UnnaturalStyle", "minor", "a2"),
    ("d04", "deepl", 0, "Pymont", "TerminologyOrProperNoun", "minor", "a1"),
    ("d04", "nmt", 0, "send Mongolia", "TerminologyOrProperNoun", "major", "a1"),
    ("d04", "nmt", 1, "Used, screen is very good", "UnnaturalStyle", "minor", "a2"),
    ("d05", "llama3", 0, "Group ah", "AmbiguityAndDisambiguation", "major", "a1"),
    ("d05", "deepl", 0, "open black", "BuzzwordOrLoanword", "major", "a1"),
    ("d05", "nmt", 0, "Open black", "BuzzwordOrLoanword", "major", "a2"),
    ("d05", "nmt", 1, "Come and come, and so I get off work", "UnnaturalStyle", "major", "a1"),
    ("d06", "nmt", 1, "Look", "Mistranslation", "major", "a1"),
    ("d06", "nmt", 1, "must-kill", "Mistranslation", "minor", "a2"),
    ("d06", "nmt", 2, "the live", "OmissionOrAddition", "minor", "a1"),
    ("d06", "deepl", 1, "final kill", "Mistranslation", "minor", "a1"),
    ("d07", "nmt", 0, "you come not", "UnnaturalStyle", "major", "a1"),
    ("d07", "nmt", 3, "Row ah, a few points out", "Mistranslation", "major", "a1"),
    ("d07", "nmt", 4, "the foot of the mountain assembly", "UnnaturalStyle", "minor", "a2"),
    ("d07", "llama3", 2, "Fragrant Hills", "TerminologyOrProperNoun", "neutral", "a1"),
    ("d07", "deepl", 3, "do you leave", "DialogueInconsistency", "minor", "a1"),
    ("d08", "nmt", 6, "letter I", "Mistranslation", "major", "a1"),
    ("d08", "nmt", 7, "Line, rushed", "BuzzwordOrLoanword", "major", "a2"),
    ("d08", "llama3", 2, "Special effects pulled full", "UnnaturalStyle", "minor", "a1"),
    ("d08", "deepl", 2, "Special effects pull full", "UnnaturalStyle", "minor", "a1"),
    ("d08", "gpt-4", 4, "eighty-eight", "TerminologyOrProperNoun", "neutral", "a2"),
    ("d09", "nmt", 0, "family cat and", "Mistranslation", "major", "a1"),
    ("d09", "nmt", 7, "recognize life", "BuzzwordOrLoanword", "minor", "a1"),
    ("d09", "deepl", 7, "recognize fate", "BuzzwordOrLoanword", "minor", "a2"),
    ("d09", "gpt-4", 1, "his majesty the cat", "UnnaturalStyle", "neutral", "a1"),
    ("d10", "deepl", 0, "league building", "Mistranslation", "major", "a1"),
    ("d10", "nmt", 0, "group build", "Mistranslation", "major", "a1"),
    ("d10", "llama3", 5, "expansion training", "TerminologyOrProperNoun", "minor", "a2"),
    ("d10", "nmt", 7, "run not", "UnnaturalStyle", "major", "a1"),
    ("d10", "gpt-4", 6, "trust fall", "TerminologyOrProperNoun", "neutral", "a2"),
]

GOLD_STANDARD = [
    ("d01", "nmt", 1, "in that drop", "Accuracy/Mistranslation", "critical", "s1"),
    ("d02", "deepl", 1, "of the people hard not to break down", "Accuracy/Mistranslation", "major", "s1"),
    ("d02", "nmt", 1, "concave shape", "Accuracy/Mistranslation", "major", "s1"),
    ("d03", "deepl", 1, "they'll win", "Accuracy/Mistranslation", "major", "s1"),
    ("d04", "nmt", 0, "send Mongolia", "LocaleConvention/Name", "major", "s1"),
    ("d04", "nmt", 1, "Used, screen is very good", "Fluency/Grammar", "minor", "s1"),
    ("d05", "deepl", 0, "open black", "Accuracy/Mistranslation", "major", "s1"),
    ("d05", "gpt-4", 0, "Guys", "Accuracy/Mistranslation", "minor", "s1"),
    ("d06", "nmt", 1, "must-kill", "Accuracy/Mistranslation", "major", "s1"),
    ("d07", "nmt", 3, "Row ah, a few points out", "Accuracy/Mistranslation", "critical", "s1"),
    ("d07", "deepl", 3, "do you leave", "Fluency/Inconsistency", "minor", "s1"),
    ("d07", "nmt", 0, "you come not", "Accuracy/Mistranslation", "major", "s1"),
    ("d08", "nmt", 6, "letter I", "Accuracy/Mistranslation", "critical", "s1"),
    ("d08", "nmt", 7, "Line, rushed", "Accuracy/Mistranslation", "major", "s1"),
    ("d08", "deepl", 2, "Special effects pull full", "Style/Awkward", "minor", "s1"),
    ("d09", "nmt", 7, "recognize life", "Accuracy/Mistranslation", "major", "s1"),
    ("d09", "gpt-4", 1, "his majesty the cat", "Style/Awkward", "neutral", "s1"),
    ("d10", "deepl", 0, "league building", "Accuracy/Mistranslation", "major", "s1"),
    ("d10", "llama3", 5, "expansion training", "Terminology/InappropriateForContext", "minor", "s1"),
]

MOCK_RESPONSES = {
    "d01/nmt": 'major: ambiguity and disambiguation: "in that drop"\nminor: mistranslation: "hit the wrong word"',
    "d02/deepl": 'major: buzzword or loanword issues: "of the people hard not to break down"',
    "d03/deepl": 'major: dialogue inconsistency: "they" (turn 1)',
    "d04/nmt": 'major: terminology or proper noun issues: "send Mongolia"\nsome stray commentary line\nminor: unnatural style: "Used, screen is very good"',
    "d08/nmt": 'major: mistranslation: "letter I"\nmajor: buzzword or loanword issues: "Line, rushed"',
    "d09/gpt-4": 'neutral: unnatural style: "his majesty the cat"',
    "d10/nmt": 'major: mistranslation: "group build"\nmajor: unnatural style: "THE FARMHOUSE"',
    "*": "no-error",
}


def locate(doc, system, turn, needle):
    text = MT[(doc, system)][turn]
    start = text.find(needle)
    assert start >= 0, f"needle not found: {doc}/{system}/{turn}: {needle!r}"
    assert text.find(needle, start + 1) < 0 or needle in ("they",), \
        f"ambiguous needle: {doc}/{system}/{turn}: {needle!r}"
    return start, start + len(needle)


def ann_record(set_id, kind, doc, system, turn, needle, label, severity, annotator):
    start, end = locate(doc, system, turn, needle)
    return {"rec": "ann", "set_id": set_id, "kind": kind, "doc_id": doc, "system_id": system,
            "turn": turn, "start": start, "end": end, "label": label, "severity": severity,
            "annotator": annotator}


def sort_key(rec):
    return (rec["doc_id"], rec["system_id"], rec["turn"], rec["start"], rec["end"],
            rec["label"], SEV_RANK[rec["severity"]], rec["annotator"])


def write(path, content):
    full = os.path.join(FIX, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w", encoding="utf-8", newline="") as f:
        f.write(content)
    print("wrote", path)


def main():
    # corpus, canonical order: docs by id, then translations by (doc, system)
    lines = []
    for doc_id, length, turns in sorted(DOCS, key=lambda d: d[0]):
        speakers = ["A", "B"]
        lines.append(dump({"rec": "doc", "doc_id": doc_id, "lang_pair": "zh-en",
                           "length_class": length,
                           "turns": [{"speaker": speakers[i % 2], "text": t}
                                     for i, t in enumerate(turns)]}))
    for (doc_id, system), turns in sorted(MT.items()):
        src = dict((d[0], d[2]) for d in DOCS)[doc_id]
        assert len(turns) == len(src), f"turn mismatch {doc_id}/{system}"
        lines.append(dump({"rec": "mt", "doc_id": doc_id, "system_id": system, "turns": turns}))
    write("mini_zh.jsonl", "\n".join(lines) + "\n")

    chat = [ann_record("gold-chat", "human_chat", *g) for g in GOLD_CHAT]
    chat.sort(key=sort_key)
    write("gold_chat.jsonl", "\n".join(dump(r) for r in chat) + "\n")

    std = [ann_record("gold-std", "human_standard", *g) for g in GOLD_STANDARD]
    std.sort(key=sort_key)
    write("gold_standard.jsonl", "\n".join(dump(r) for r in std) + "\n")

    write("mock_responses.json", json.dumps(MOCK_RESPONSES, indent=2, ensure_ascii=False) + "\n")

    # Label Studio exports
    text1 = MT[("d01", "nmt")][1]
    s1, e1 = text1.find("in that drop"), text1.find("in that drop") + len("in that drop")
    text2 = MT[("d06", "nmt")][1]
    small = [
        {"id": 1,
         "data": {"doc_id": "d01", "system_id": "nmt", "turn": 1, "text": text1},
         "annotations": [{
             "id": 101, "completed_by": {"email": "a1@example.com"},
             "result": [
                 {"id": "r1", "type": "labels", "from_name": "label", "to_name": "text",
                  "value": {"start": s1, "end": e1, "text": "in that drop",
                            "labels": ["Ambiguity and Disambiguation"]}},
                 {"id": "r1", "type": "choices", "from_name": "severity", "to_name": "text",
                  "value": {"start": s1, "end": e1, "choices": ["major"]}}]}]},
        {"id": 2,
         "data": {"doc_id": "d06", "system_id": "nmt", "turn": 1, "text": text2},
         "annotations": [{
             "id": 102, "completed_by": {"email": "a1@example.com"},
             "result": [
                 {"id": "r2", "type": "labels", "from_name": "label", "to_name": "text",
                  "value": {"start": 0, "end": 4, "text": "Look", "labels": ["Mistranslation"]}},
                 {"id": "r2", "type": "choices", "from_name": "severity", "to_name": "text",
                  "value": {"start": 0, "end": 4, "choices": ["major"]}}]}]},
    ]
    write("labelstudio_small.json", json.dumps(small, indent=2, ensure_ascii=False) + "\n")

    golden_small = [
        {"rec": "ann", "set_id": "labelstudio_small", "kind": "human_chat", "doc_id": "d01",
         "system_id": "nmt", "turn": 1, "start": s1, "end": e1,
         "label": "AmbiguityAndDisambiguation", "severity": "major", "annotator": "a1@example.com"},
        {"rec": "ann", "set_id": "labelstudio_small", "kind": "human_chat", "doc_id": "d06",
         "system_id": "nmt", "turn": 1, "start": 0, "end": 4, "label": "Mistranslation",
         "severity": "major", "annotator": "a1@example.com"},
    ]
    write("golden/labelstudio_small.canonical.jsonl", "\n".join(dump(r) for r in golden_small) + "\n")

    # UTF-16 offsets over text with an astral-plane character: 𠮷 is two
    # UTF-16 code units, so utf16 offsets diverge from scalar offsets.
    cjk_text = "𠮷野家で食べた"
    assert len(cjk_text) == 7
    cjk = [
        {"id": 1,
         "data": {"doc_id": "dcjk", "system_id": "sys", "turn": 0, "text": cjk_text},
         "annotations": [{
             "id": 201, "completed_by": {"email": "a2@example.com"},
             "result": [
                 {"id": "c1", "type": "labels", "from_name": "label", "to_name": "text",
                  "value": {"start": 2, "end": 4, "text": "野家", "labels": ["Mistranslation"]}},
                 {"id": "c1", "type": "choices", "from_name": "severity", "to_name": "text",
                  "value": {"start": 2, "end": 4, "choices": ["major"]}},
                 {"id": "c2", "type": "labels", "from_name": "label", "to_name": "text",
                  "value": {"start": 5, "end": 8, "text": "食べた", "labels": ["Unnatural Style"]}},
                 {"id": "c2", "type": "choices", "from_name": "severity", "to_name": "text",
                  "value": {"start": 5, "end": 8, "choices": ["minor"]}}]}]},
    ]
    write("labelstudio_cjk.json", json.dumps(cjk, indent=2, ensure_ascii=False) + "\n")

    bad = {"rec": "ann", "set_id": "bad", "kind": "human_chat", "doc_id": "d01",
           "system_id": "nmt", "turn": 1, "start": 5, "end": 99, "label": "Mistranslation",
           "severity": "major", "annotator": "a1"}
    write("bad_annotations.jsonl", dump(bad) + "\n")


if __name__ == "__main__":
    main()
